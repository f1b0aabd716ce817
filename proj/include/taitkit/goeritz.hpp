#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taitkit/diagram.hpp"
#include "taitkit/int_form.hpp"

namespace taitkit {

/// Goeritz sign of crossing c relative to the shading in which `surface`
/// regions form the spanning surface.
int goeritz_sign(const Diagram& d, const Coloring& coloring, CrossingId c, Color surface);

/// Classical Goeritz matrix on the regions of `region_color`: off-diagonal
/// x_ij = -sum of Goeritz signs over crossings joining R_i and R_j, diagonal
/// x_ii = -sum_{j != i} x_ij, first region deleted. It represents the
/// Gordon-Litherland pairing of the chessboard of the opposite color, so its
/// dimension is (#regions of region_color) - 1.
SymmetricIntForm goeritz_matrix(const Diagram& d, const Coloring& coloring, Color region_color);

/// Gordon-Litherland form of the chessboard surface made of `surface` regions.
SymmetricIntForm chessboard_form(const Diagram& d, const Coloring& coloring, Color surface);

/// n - r + 1 with r the number of `surface` regions; throws
/// DisconnectedChessboard if the surface's region graph is disconnected.
int beta1_chessboard(const Diagram& d, const Coloring& coloring, Color surface);

struct Slopes {
  int black;  // s(B), B the positive-definite chessboard
  int white;  // s(W)

  friend bool operator==(const Slopes&, const Slopes&) = default;
};

/// s(B) = 2 #positive crossings, s(W) = -2 #negative crossings. Throws
/// NotAlternating.
Slopes slopes(const Diagram& d);

/// Slope of a chessboard from the Gordon-Litherland correction term: twice
/// the sum of Goeritz signs over the crossings where the surface does not
/// respect the link orientation.
int gl_slope(const Diagram& d, const Coloring& coloring, Color surface);

struct ChessboardSummary {
  Color shading = Color::Uncolored;  // which coloring class forms the surface
  int beta1 = 0;
  SymmetricIntForm form;
  Definiteness definiteness = Definiteness::Degenerate;
  int slope = 0;
};

/// Both chessboards, labelled so that `b` is the positive-definite one
/// whenever the diagram admits that labelling.
struct ChessboardPair {
  Coloring coloring;
  ChessboardSummary b;
  ChessboardSummary w;
  bool labelled_by_sign = false;
};

ChessboardPair analyze_chessboards(const Diagram& d);

/// Bounded search for an integer vector with entries in [-bound, bound] whose
/// self-pairing is +1 or -1.
std::optional<std::vector<std::int64_t>> find_unit_self_pairing(const SymmetricIntForm& f, int bound);

/// Default search bound: 2 up to dim 8, 1 above.
int unit_search_bound(int dim) noexcept;

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::string name;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Verifies the chessboard identities of a connected diagram. Failed checks
/// are recorded, never thrown.
ValidationReport check_identities(const Diagram& d, std::string name = {});

std::string to_json(const ValidationReport& report);

/// (n, w, s_B, s_W, beta1(B), beta1(W), |det|).
struct InvariantVector {
  int crossings = 0;
  int writhe = 0;
  int slope_b = 0;
  int slope_w = 0;
  int beta1_b = 0;
  int beta1_w = 0;
  std::int64_t determinant = 0;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Requires an alternating diagram (slopes).
InvariantVector invariant_vector(const Diagram& d);

}  // namespace taitkit
