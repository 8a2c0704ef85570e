#include "raney.h"

#include "raney/coral.hpp"
#include "raney/error.hpp"
#include "raney/numbers.hpp"
#include "raney/plane_tree.hpp"
#include "raney/verify.hpp"
#include "raney/webs.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

struct raney_corals {
    std::vector<raney::CoralDiagram> items;
};

struct raney_webs {
    std::uint32_t p = 0;
    std::uint32_t r = 0;
    std::uint32_t k = 0;
    std::vector<raney::OrientedTreeWeb> items;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename Fn>
raney_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        t_last_error.clear();
        return RANEY_OK;
    } catch (const raney::ParameterMismatchError& e) {
        t_last_error = e.what();
        return RANEY_ERROR_PARAMETER_MISMATCH;
    } catch (const raney::MalformedCodeError& e) {
        t_last_error = e.what();
        return RANEY_ERROR_MALFORMED_CODE;
    } catch (const raney::SizeLimitError& e) {
        t_last_error = e.what();
        return RANEY_ERROR_SIZE_LIMIT;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return RANEY_ERROR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return RANEY_ERROR_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return RANEY_ERROR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return RANEY_ERROR_INTERNAL;
    }
}

void require(bool ok, const char* message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

raney_status nat_out(const raney::ExactNat& value, char** out) {
    *out = dup_string(value.str());
    return RANEY_OK;
}

void check_cap(const raney::ExactNat& size, std::uint64_t cap) {
    if (size > cap) {
        throw raney::SizeLimitError(
            "enumeration of " + size.str() + " objects exceeds the cap of " +
                std::to_string(cap),
            cap);
    }
}

}  // namespace

extern "C" {

const char* raney_version(void) { return "raney 1.0.0"; }

const char* raney_last_error(void) { return t_last_error.c_str(); }

void raney_string_free(char* s) { delete[] s; }

raney_status raney_binomial(uint64_t n, int64_t k, char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        nat_out(raney::binomial(n, k), out);
    });
}

raney_status raney_number(uint32_t p, uint32_t r, uint32_t n, char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        nat_out(raney::raney_closed(p, r, n), out);
    });
}

raney_status raney_number_alt(uint32_t p, uint32_t r, uint32_t k, char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        nat_out(raney::raney_closed_alt(p, r, k), out);
    });
}

raney_status raney_p_catalan(uint32_t p, uint32_t k, char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        nat_out(raney::p_catalan(p, k), out);
    });
}

raney_status raney_number_composition_sum(uint32_t p, uint32_t r, uint32_t k,
                                          char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        nat_out(raney::raney_composition_sum(p, r, k), out);
    });
}

raney_status raney_number_convolution(uint32_t p, uint32_t r, uint32_t k,
                                      char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        nat_out(raney::raney_convolution(p, r, k), out);
    });
}

raney_status raney_conjecture_values(uint32_t n, uint32_t j, uint32_t k,
                                     char** constant_out, char** pointed_out) {
    return wrap([&] {
        require(constant_out != nullptr && pointed_out != nullptr,
                "out must not be null");
        const raney::ConjecturePair pair = raney::conjecture_values(n, j, k);
        *constant_out = dup_string(pair.constant_boundary.str());
        *pointed_out = dup_string(pair.pointed_boundary.str());
    });
}

raney_status raney_corals_enumerate(uint32_t p, uint32_t r, uint32_t k,
                                    uint64_t cap, raney_coral_method method,
                                    raney_corals** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        require(method == RANEY_CORAL_TUPLE || method == RANEY_CORAL_TIERED,
                "unknown enumeration method");
        check_cap(raney::raney_closed(p, r, k), cap);
        auto handle = std::make_unique<raney_corals>();
        handle->items = method == RANEY_CORAL_TIERED
                            ? raney::enumerate_coral_tiered(p, r, k)
                            : raney::enumerate_coral_tuple(p, r, k);
        *out = handle.release();
    });
}

uint64_t raney_corals_count(const raney_corals* handle) {
    return handle == nullptr ? 0 : handle->items.size();
}

raney_status raney_corals_record(const raney_corals* handle, uint64_t index,
                                 char** out) {
    return wrap([&] {
        require(handle != nullptr && out != nullptr,
                "handle and out must not be null");
        require(index < handle->items.size(), "index out of range");
        *out = dup_string(raney::record_line(handle->items[index]));
    });
}

raney_status raney_corals_dot(const raney_corals* handle, uint64_t index,
                              char** out) {
    return wrap([&] {
        require(handle != nullptr && out != nullptr,
                "handle and out must not be null");
        require(index < handle->items.size(), "index out of range");
        *out = dup_string(raney::to_dot(handle->items[index].tree(), "coral"));
    });
}

void raney_corals_free(raney_corals* handle) { delete handle; }

raney_status raney_count_coral(uint32_t p, uint32_t r, uint32_t k, uint64_t cap,
                               char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        check_cap(raney::raney_closed(p, r, k), cap);
        nat_out(raney::count_coral(p, r, k), out);
    });
}

namespace {

// Rebuilds a CoralDiagram from parameters plus a bare code; the star count
// is determined by the code itself.
raney::CoralDiagram coral_from_code(uint32_t p, uint32_t r,
                                    const char* code_csv) {
    require(code_csv != nullptr, "code must not be null");
    raney::CanonicalCode code = raney::code_from_string(code_csv);
    std::uint32_t stars = 0;
    for (std::size_t i = 1; i < code.size(); ++i) {
        if (code[i] == p) {
            ++stars;
        }
    }
    raney::CoralDiagram diagram{p, r, stars, std::move(code)};
    if (!raney::is_valid_coral(diagram)) {
        throw raney::MalformedCodeError(
            "code is not a valid coral diagram for the given parameters");
    }
    return diagram;
}

}  // namespace

raney_status raney_coral_subdivide(uint32_t p, const char* code_csv,
                                   char** out_code_csv) {
    return wrap([&] {
        require(out_code_csv != nullptr, "out must not be null");
        const raney::CoralDiagram mapped =
            raney::subdivide_leftmost_edge(coral_from_code(p, p, code_csv));
        *out_code_csv = dup_string(raney::code_to_string(mapped.code));
    });
}

raney_status raney_coral_chain_parts(uint32_t r, const char* code_csv,
                                     char** out_parts_csv) {
    return wrap([&] {
        require(out_parts_csv != nullptr, "out must not be null");
        const raney::WeakComposition parts =
            raney::chain_weak_composition(coral_from_code(1, r, code_csv));
        std::string text;
        for (std::size_t i = 0; i < parts.parts.size(); ++i) {
            if (i > 0) {
                text += ',';
            }
            text += std::to_string(parts.parts[i]);
        }
        *out_parts_csv = dup_string(text);
    });
}

raney_status raney_webs_sourcesink(uint32_t p, uint32_t k, uint64_t cap,
                                   raney_webs** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        require(p >= 2, "source/sink trees need p >= 2");
        check_cap(raney::raney_closed(p * p, p, k), cap);
        auto handle = std::make_unique<raney_webs>();
        handle->p = p * p;
        handle->r = p;
        handle->k = k;
        handle->items = raney::enumerate_sourcesink_trees(p, k);
        *out = handle.release();
    });
}

raney_status raney_webs_minus(uint32_t k, uint64_t cap, raney_webs** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        auto handle = std::make_unique<raney_webs>();
        handle->p = 4;
        handle->r = 1;
        handle->k = k;
        handle->items = raney::enumerate_a2_tree_webs_minus(k, cap);
        *out = handle.release();
    });
}

uint64_t raney_webs_count(const raney_webs* handle) {
    return handle == nullptr ? 0 : handle->items.size();
}

raney_status raney_webs_record(const raney_webs* handle, uint64_t index,
                               char** out) {
    return wrap([&] {
        require(handle != nullptr && out != nullptr,
                "handle and out must not be null");
        require(index < handle->items.size(), "index out of range");
        *out = dup_string(raney::record_line(handle->items[index], handle->p,
                                             handle->r, handle->k));
    });
}

raney_status raney_webs_dot(const raney_webs* handle, uint64_t index,
                            char** out) {
    return wrap([&] {
        require(handle != nullptr && out != nullptr,
                "handle and out must not be null");
        require(index < handle->items.size(), "index out of range");
        *out = dup_string(raney::to_dot(handle->items[index], "web"));
    });
}

void raney_webs_free(raney_webs* handle) { delete handle; }

raney_status raney_orient_with_word(const char* code_csv, const char* word,
                                    int* matched, char** out_classes) {
    return wrap([&] {
        require(code_csv != nullptr && word != nullptr && matched != nullptr &&
                    out_classes != nullptr,
                "arguments must not be null");
        const raney::PlaneTree tree =
            raney::decode(raney::code_from_string(code_csv));
        const auto web = raney::orient_with_word(tree, word);
        if (web.has_value()) {
            *matched = 1;
            *out_classes = dup_string(web->classes);
        } else {
            *matched = 0;
        }
    });
}

raney_status raney_sourcesink_filter_count(uint32_t p, uint32_t k, uint64_t cap,
                                           char** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        nat_out(raney::count_sourcesink_by_filter(p, k, cap), out);
    });
}

raney_status raney_verify(uint32_t p_max, uint32_t r_max, uint32_t k_max,
                          uint64_t cap, char** report, int* all_passed) {
    return wrap([&] {
        require(report != nullptr && all_passed != nullptr,
                "report and all_passed must not be null");
        require(p_max >= 1 && r_max >= 1, "p_max and r_max must be >= 1");
        raney::VerifyOptions options;
        options.p_max = p_max;
        options.r_max = r_max;
        options.k_max = k_max;
        options.cap = cap;
        const auto results = raney::run_verification(options);
        *report = dup_string(raney::format_report(results));
        *all_passed = raney::all_passed(results) ? 1 : 0;
    });
}

}  // extern "C"
