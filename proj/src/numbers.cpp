#include "raney/numbers.hpp"

#include "raney/error.hpp"

#include <numeric>
#include <stdexcept>

namespace raney {

namespace {

void require_positive(std::uint32_t value, const char* name) {
    if (value == 0) {
        throw std::invalid_argument(std::string(name) + " must be >= 1");
    }
}

// Exact division that refuses to lose a remainder.  All the closed forms
// below are integers by theorem, so a nonzero remainder means the
// implementation itself is broken.
ExactNat exact_divide(const ExactNat& numerator, const ExactNat& divisor) {
    ExactNat quotient;
    ExactNat remainder;
    boost::multiprecision::divide_qr(numerator, divisor, quotient, remainder);
    if (remainder != 0) {
        throw std::logic_error("exact division left a remainder");
    }
    return quotient;
}

}  // namespace

ExactNat binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) {
        return 0;
    }
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (n - kk < kk) {
        kk = n - kk;
    }
    ExactNat result = 1;
    // (n-kk+i) / i divides exactly at every step: the running value is the
    // binomial C(n-kk+i, i).
    for (std::uint64_t i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

ExactNat raney_closed(std::uint32_t p, std::uint32_t r, std::uint32_t n) {
    require_positive(p, "p");
    require_positive(r, "r");
    const std::uint64_t denom = std::uint64_t{n} * p + r;
    return exact_divide(r * binomial(denom, n), ExactNat(denom));
}

ExactNat raney_closed_alt(std::uint32_t p, std::uint32_t r, std::uint32_t k) {
    require_positive(p, "p");
    require_positive(r, "r");
    require_positive(k, "k");
    const std::uint64_t top = std::uint64_t{p} * k + r - 1;
    return exact_divide(r * binomial(top, std::int64_t{k} - 1), ExactNat(k));
}

ExactNat p_catalan(std::uint32_t p, std::uint32_t k) {
    require_positive(p, "p");
    if (k == 0) {
        return 1;
    }
    return exact_divide(binomial(std::uint64_t{p} * k, std::int64_t{k} - 1),
                        ExactNat(k));
}

namespace {

// Extends a partial composition one part at a time; `slots` is the number
// of attachment slots the previous part opened (r for the first part,
// p * previous part afterwards), so the running product is exactly the
// composition's term.
void accumulate_composition_terms(std::uint32_t p, std::uint32_t remaining,
                                  std::uint64_t slots, const ExactNat& factor,
                                  ExactNat& total) {
    for (std::uint32_t part = 1; part <= remaining; ++part) {
        ExactNat term = factor * binomial(slots, part);
        if (term == 0) {
            continue;  // part exceeds the open slots; all extensions vanish
        }
        if (part == remaining) {
            total += term;
        } else {
            accumulate_composition_terms(p, remaining - part,
                                         std::uint64_t{p} * part, term, total);
        }
    }
}

}  // namespace

ExactNat raney_composition_sum(std::uint32_t p, std::uint32_t r,
                               std::uint32_t k) {
    require_positive(p, "p");
    require_positive(r, "r");
    if (k == 0) {
        return 1;
    }
    ExactNat total = 0;
    accumulate_composition_terms(p, k, r, 1, total);
    return total;
}

ExactNat raney_convolution(std::uint32_t p, std::uint32_t r, std::uint32_t k) {
    require_positive(p, "p");
    require_positive(r, "r");
    std::vector<ExactNat> catalan(k + 1);
    for (std::uint32_t i = 0; i <= k; ++i) {
        catalan[i] = p_catalan(p, i);
    }
    // r-fold convolution, one factor at a time.
    std::vector<ExactNat> acc = catalan;
    for (std::uint32_t round = 1; round < r; ++round) {
        std::vector<ExactNat> next(k + 1, ExactNat(0));
        for (std::uint32_t i = 0; i <= k; ++i) {
            if (acc[i] == 0) {
                continue;
            }
            for (std::uint32_t j = 0; i + j <= k; ++j) {
                next[i + j] += acc[i] * catalan[j];
            }
        }
        acc = std::move(next);
    }
    return acc[k];
}

std::uint32_t Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint32_t{0});
}

std::uint32_t WeakComposition::total() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint32_t{0});
}

namespace {

void build_compositions(std::uint32_t remaining, std::vector<std::uint32_t>& parts,
                        std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition{parts});
        return;
    }
    for (std::uint32_t part = 1; part <= remaining; ++part) {
        parts.push_back(part);
        build_compositions(remaining - part, parts, out);
        parts.pop_back();
    }
}

void build_weak_compositions(std::uint32_t remaining, std::uint32_t slots_left,
                             std::vector<std::uint32_t>& parts,
                             std::vector<WeakComposition>& out) {
    if (slots_left == 1) {
        parts.push_back(remaining);
        out.push_back(WeakComposition{parts});
        parts.pop_back();
        return;
    }
    for (std::uint32_t part = 0; part <= remaining; ++part) {
        parts.push_back(part);
        build_weak_compositions(remaining - part, slots_left - 1, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(std::uint32_t k) {
    std::vector<Composition> out;
    std::vector<std::uint32_t> parts;
    build_compositions(k, parts, out);
    return out;
}

std::vector<WeakComposition> weak_compositions(std::uint32_t k, std::uint32_t r) {
    require_positive(r, "r");
    std::vector<WeakComposition> out;
    std::vector<std::uint32_t> parts;
    build_weak_compositions(k, r, parts, out);
    return out;
}

}  // namespace raney
