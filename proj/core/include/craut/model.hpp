#ifndef CRAUT_MODEL_HPP
#define CRAUT_MODEL_HPP

#include <string>
#include <vector>

#include "craut/mpoly.hpp"

namespace craut {

/// Rigid CR model in C^{n+k}: w_j - bar(w_j) = Xi_j(z, zbar) with Xi_j
/// independent of w. Each Xi_j lives over 2n variables ordered
/// [zbar_1..zbar_n, z_1..z_n], matching the (alpha, beta) coefficient
/// indexing Xi_{j,alpha,beta} of zbar^alpha z^beta.
struct ModelSpec {
    size_t n = 0;  // CR dimension
    size_t k = 0;  // codimension
    std::vector<MPoly> xi;
    std::string name;
};

/// Violations of the model invariants (empty means valid): each Xi_j must
/// have no constant and no linear term, and w_j - bar(w_j) = Xi_j forces the
/// reality symmetry Xi_{j,beta,alpha} = -conj(Xi_{j,alpha,beta}).
std::vector<std::string> validate_model(const ModelSpec& m);

/// Coefficient table of one model: (j, alpha, beta) -> GaussRat.
struct XiTable {
    size_t n = 0;
    size_t k = 0;
    std::vector<MPoly> xi;  // validated copy

    GaussRat coeff(size_t j, const Mono& alpha, const Mono& beta) const;
    unsigned max_z_degree() const;
    unsigned max_zbar_degree() const;
};

/// Validates and tabulates; throws std::invalid_argument listing violations.
XiTable xi_expand(const ModelSpec& m);

/// weight(z_i) = 1 and weight(w_j) = total degree of Xi_j.
std::vector<unsigned> model_weights(const ModelSpec& m);

/// Parses the defining-equation DSL:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := coeff | 'z' idx? ('^' int)? | 'zb' idx? ('^' int)?
///   coeff  := rational | rational '*i' | 'i'
/// idx is 1-based and required only when n > 1.
MPoly parse_xi_dsl(const std::string& text, size_t n);
std::string render_xi(const MPoly& xi, size_t n);

/// Model file: {"n":int,"k":int,"xi":[equation,...]} where each equation is
/// either a DSL string or a term list
/// [{"re":"p/q","im":"p/q","zbar":[..],"z":[..]}, ...].
ModelSpec parse_model_json(const std::string& json_text);
std::string render_model_json(const ModelSpec& m, int indent = 2);
ModelSpec load_model_file(const std::string& path);

/// Built-in models used by the test fixtures.
ModelSpec heisenberg_model();
ModelSpec paper_model(int which);  // 1, 2, or 3

}  // namespace craut

#endif
