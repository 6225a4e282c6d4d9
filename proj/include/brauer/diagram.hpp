// brauer - diagram semigroups and complexity bounds
//
// This file declares the Diagram class, a canonical set partition of the
// 2n boundary points {1, ..., n} (bottom row) and {1', ..., n'} (top row),
// together with the diagram-level algebra: the product, the involution,
// rank, string classification, parity, shifts and twists, family
// predicates and the named generators used throughout the library.

#ifndef BRAUER_DIAGRAM_HPP_
#define BRAUER_DIAGRAM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exception.hpp"

namespace brauer {

  //! Largest degree supported by Diagram (labels are stored as bytes).
  constexpr std::size_t MAX_DEGREE = 64;

  enum class Side : std::uint8_t { Bottom = 0, Top = 1 };

  struct Point {
    Side        side;
    std::size_t index;  // 1-based

    static Point bottom(std::size_t i) {
      return {Side::Bottom, i};
    }
    static Point top(std::size_t i) {
      return {Side::Top, i};
    }

    auto operator<=>(Point const&) const = default;
  };

  using Block = std::vector<Point>;

  enum class StringKind : std::uint8_t {
    Through,
    Inner,
    Outer,
    BottomSingleton,
    TopSingleton,
    Other
  };

  enum class Parity : std::uint8_t { Even, Odd, Mixed, RankZero };

  char const* to_string(StringKind kind);
  char const* to_string(Parity parity);

  //! A partition of the 2n points of degree n, held in canonical form.
  //!
  //! Points are numbered 0, ..., 2n - 1 in the total order
  //! Bottom 1 < ... < Bottom n < Top 1 < ... < Top n, and each point carries
  //! the label of its block. Labels are assigned in order of first
  //! appearance, so blocks are sorted by their minimum point and two
  //! diagrams are equal iff their label vectors are equal.
  class Diagram {
   public:
    Diagram() = default;

    //! Builds a diagram from arbitrary per-point labels (length 2n) and
    //! canonicalises them.
    static Diagram from_labels(std::size_t                      n,
                               std::vector<std::uint32_t> const& labels);

    //! As from_labels, for byte-sized labels held in a buffer of length 2n.
    static Diagram from_small_labels(std::size_t n, std::uint8_t const* raw);

    //! Builds a diagram from a list of blocks; throws BadIndex unless the
    //! blocks partition the 2n points.
    static Diagram from_blocks(std::size_t n, std::vector<Block> const& blocks);

    std::size_t degree() const noexcept {
      return _degree;
    }

    std::size_t num_points() const noexcept {
      return _labels.size();
    }

    std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }

    //! Label of the point at position pos (0 <= pos < 2n).
    std::uint8_t label(std::size_t pos) const {
      return _labels[pos];
    }

    std::uint8_t label(Point p) const {
      return _labels[position(p)];
    }

    std::vector<std::uint8_t> const& labels() const noexcept {
      return _labels;
    }

    std::size_t position(Point p) const noexcept {
      return (p.side == Side::Bottom ? 0 : _degree) + p.index - 1;
    }

    Point point(std::size_t pos) const noexcept {
      return pos < _degree ? Point::bottom(pos + 1)
                           : Point::top(pos - _degree + 1);
    }

    //! Blocks in canonical order (sorted by minimum point, points sorted).
    std::vector<Block> blocks() const;

    std::size_t hash() const noexcept;

    bool operator==(Diagram const&) const = default;

    //! Degree first, then the canonical label vector.
    std::strong_ordering operator<=>(Diagram const& that) const {
      if (auto c = _degree <=> that._degree; c != 0) {
        return c;
      }
      return _labels <=> that._labels;
    }

   private:
    std::uint8_t              _degree     = 0;
    std::uint8_t              _num_blocks = 0;
    std::vector<std::uint8_t> _labels;
  };

  struct DiagramHash {
    std::size_t operator()(Diagram const& d) const noexcept {
      return d.hash();
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Products and structure
  ////////////////////////////////////////////////////////////////////////

  Diagram identity(std::size_t n);

  //! The 4-step partition product: glue a's top row to b's bottom row,
  //! take the transitive closure and forget the middle row.
  Diagram multiply(Diagram const& a, Diagram const& b);

  inline Diagram operator*(Diagram const& a, Diagram const& b) {
    return multiply(a, b);
  }

  //! a^k for k >= 1 (k = 0 gives the identity).
  Diagram power(Diagram const& a, std::size_t k);

  Diagram star(Diagram const& a);

  std::size_t rank(Diagram const& a);

  //! Bottom indices lying in through blocks, ascending.
  std::vector<std::size_t> domain(Diagram const& a);
  //! Top indices lying in through blocks, ascending.
  std::vector<std::size_t> range(Diagram const& a);

  std::vector<std::pair<Block, StringKind>> classify_strings(Diagram const& a);

  Parity parity(Diagram const& a);

  bool is_idempotent(Diagram const& a);
  bool is_projection(Diagram const& a);

  //! Relabels every index on both rows by +k mod n.
  Diagram shift(Diagram const& a, long k);
  //! Relabels the top row by +k mod n.
  Diagram twist(Diagram const& a, long k);

  ////////////////////////////////////////////////////////////////////////
  // Named elements
  ////////////////////////////////////////////////////////////////////////

  //! The rotation {{1,2'},{2,3'},...,{n,1'}}.
  Diagram zeta(std::size_t n);
  //! ζ^k for any integer k (negative powers wrap mod n).
  Diagram zeta_power(std::size_t n, long k);
  //! {{i,j},{i',j'}} plus vertical lines elsewhere; 1 <= i < j <= n.
  Diagram gamma_pair(std::size_t n, std::size_t i, std::size_t j);
  //! γ_{i,i+1} with i + 1 taken mod n; 1 <= i <= n, n >= 2.
  Diagram gamma_cyc(std::size_t n, std::size_t i);
  //! {{2,3},{2',3'},{n-1,n},{(n-1)',n'}} plus vertical lines; n even >= 6.
  Diagram epsilon(std::size_t n);
  //! The partial identity with {i} and {i'} as singletons.
  Diagram sigma(std::size_t n, std::size_t i);

  //! {{n-1,n},{1',2'},{k,(k+2)'}}, equal to γ_{n-1}···γ_1.
  Diagram lambda_elt(std::size_t n);
  //! {{k,(k+2 mod n-2)'}, {n-1,n}, {(n-1)',n'}}, equal to λγ_nγ_{n-1}.
  Diagram xi_elt(std::size_t n);
  //! {{k,(k+1)'} k <= n-2, {n-1,n}, {1',n'}} for odd n.
  Diagram tau_elt(std::size_t n);

  //! Recomputes λ, ξ (and τ for odd n) from their defining products and
  //! compares with the closed forms.
  bool verify_named_elements(std::size_t n);

  //! σ given in one-line notation with 1-based images.
  Diagram embed_permutation(std::size_t n, std::vector<std::size_t> const& images);
  //! φ : [n] -> [n] in one-line notation with 1-based images.
  Diagram embed_transformation(std::size_t                     n,
                               std::vector<std::size_t> const& images);

  ////////////////////////////////////////////////////////////////////////
  // Family predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_brauer(Diagram const& a);
  bool is_partial_brauer(Diagram const& a);
  //! Non-crossing test for the boundary walk Bottom 1..n, Top n..1.
  bool is_planar(Diagram const& a);
  //! True iff ζ^a · α · ζ^b is planar for some a, b.
  bool is_annular(Diagram const& a);
  bool is_jones(Diagram const& a);

  ////////////////////////////////////////////////////////////////////////
  // Text format (v1): "n:[{1,1'},{2,2'}]"
  ////////////////////////////////////////////////////////////////////////

  constexpr int ENCODING_VERSION = 1;

  std::string encode(Diagram const& a);
  //! Parses the v1 text format; n is the expected degree, or 0 to accept
  //! whatever degree the text declares.
  Diagram decode(std::string_view text, std::size_t n = 0);

  std::ostream& operator<<(std::ostream& os, Diagram const& a);

}  // namespace brauer

template <>
struct std::hash<brauer::Diagram> {
  std::size_t operator()(brauer::Diagram const& d) const noexcept {
    return d.hash();
  }
};

#endif  // BRAUER_DIAGRAM_HPP_
