#ifndef GAMMALC_RENDER_HPP
#define GAMMALC_RENDER_HPP

#include <optional>
#include <string>

#include "gammalc/coefficients.hpp"
#include "gammalc/lattice.hpp"

// Plain-text layouts. Gamma variables print as g0, g1, ...; a product
// g_j g_k prints as "gj gk" and a square as "gj^2".

namespace gammalc {

/// One line per distinct h_i (i <= n/2): "h_1 = h_5 = 6 g0 + g1".
std::string render_h_in_gamma(long n);

/// "h_i^2 - h_{i-1} h_{i+1} = ..." with one output row per diagonal
/// j + k = s, terms ordered by increasing spread. Zero coefficients are
/// printed ("+ 0 g0 g7") unless `compact`.
std::string render_coeff_table(const CoeffTable& table, bool compact = false);

/// The regrouped form, each diagonal in brackets when it has more than one
/// term.
std::string render_regrouped(const CoeffTable& table);

/// "825 1177 -182 -1820 | tail-sign: OK"
std::string render_diagonal(const DiagonalSequence& seq);

/// Grid of lattice points: PQ marked 'o', P'Q' marked 'x', other path
/// vertices '#', path vertices on a segment upper-cased ('O', 'X'). Rows run
/// from y = max down to 0.
std::string render_grid(const SegmentConfig& cfg,
                        const std::optional<LatticePath>& path = std::nullopt);

std::string render_certificate(const Certificate& cert, bool ascii = false);

}  // namespace gammalc

#endif
