#pragma once

#include <stdexcept>
#include <string>

namespace sheafline {

// Single exception type for every validation failure in the library.
// The kind is what the CLI maps to exit codes (unsupported_factorization
// gets its own code, everything else is an input validation error).
class error : public std::runtime_error {
public:
    enum class kind {
        not_unimodular,
        unsupported_factorization,
        inconsistent_glue,
        rank_mismatch,
        vertex_not_found,
        not_contractible,
        duplicate_points,
        weight_too_small,
        non_acyclic,
        degenerate_form,
        dimension_mismatch,
        arity_mismatch,
        internal_inconsistency,
        no_line_bundle_with_class,
        negative_twist_present,
        degenerate_triple,
        mixed_fields,
        singular_matrix,
        parse_error,
    };

    error(kind k, const std::string& message) : std::runtime_error(message), kind_(k) {}

    kind which() const noexcept { return kind_; }

private:
    kind kind_;
};

[[noreturn]] inline void fail(error::kind k, const std::string& message) {
    throw error(k, message);
}

} // namespace sheafline
