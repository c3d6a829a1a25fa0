#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binact/action.hpp"
#include "binact/group.hpp"

namespace binact {

/// G acting on G|H by g(g1 H, g2 H) = g1 g g1^-1 g2 H. Carrier point c is the
/// c-th coset of coset_space(G, H). Throws NotNormal with a pair of
/// representative choices that disagree when H is not normal.
BinaryGSpace coset_action(const FiniteGroup& group, const Subgroup& subgroup);

/// The eta-space: G acting on itself by eta(g, g1, g2) = g1 g g1^-1 g2.
BinaryGSpace standard_distributive_action(const FiniteGroup& group);

/// Units {1,2,3,4} of Z_5 acting on themselves by g(x, x') = g^x x' mod 5.
/// Group element and carrier point i both stand for the residue i + 1.
BinaryGSpace z5_multiplicative_space();

/// S_3 = {e, x, h, xh, hx, xhx} as a group, in that index order, with
/// x = (12) and h = (23).
FiniteGroup s3_presented();

/// G = {e, h} <= S_3 acting on X = S_3 by g(a, b) = a^-1 g a b. Carrier
/// labels follow s3_presented().
BinaryGSpace s3_conjugation_space();

/// The finite stand-in for the step-infinity construction: in D_m take
/// x = s and h = s r (both of order 2, x h = r of order m) and let {e, h} act
/// on D_m by g(a, b) = a^-1 g a b. Labels follow dihedral_group(m).
BinaryGSpace dihedral_conjugation_space(std::size_t m);

/// Carrier index of the distinguished point x = s in dihedral_conjugation_space(m).
Index dihedral_base_point(std::size_t m);

/// Z acting on Z by n(x, x') = n x + x', truncated to the carrier window
/// [-N, N] with group elements drawn from [-2N, 2N]. Results outside the
/// window are counted as escapes and never clamped, so every reported orbit is
/// the intersection of the true orbit with the window.
class WindowedIntSpace {
 public:
  explicit WindowedIntSpace(std::int64_t window);

  std::int64_t window() const noexcept { return window_; }
  std::int64_t group_radius() const noexcept { return 2 * window_; }
  std::size_t carrier_size() const noexcept { return static_cast<std::size_t>(2 * window_ + 1); }
  std::size_t group_size() const noexcept { return static_cast<std::size_t>(4 * window_ + 1); }
  /// Group and carrier are truncations of Z.
  static constexpr bool partial = true;

  /// n x + y when it lies in the window.
  std::optional<std::int64_t> apply(std::int64_t n, std::int64_t x, std::int64_t y) const;

  Index point_index(std::int64_t value) const;
  std::int64_t point_value(Index index) const;
  bool in_window(std::int64_t value) const noexcept { return value >= -window_ && value <= window_; }

  /// Orbit chain inside the window; chain sets hold carrier indices, use
  /// point_value to read them as integers. `step` is relative to the window.
  OrbitReport orbit(std::int64_t x) const;

 private:
  std::int64_t window_;
};

WindowedIntSpace windowed_integer_space(std::int64_t window);

/// A space resolved from a gallery name: "z5", "s3", "dihedral:m", "eta:G",
/// "coset:G:H", "zwin:N". G is a group name (see parse_group_name); H is a
/// comma-separated list of element names or indices generating the subgroup.
struct GalleryEntry {
  std::string name;
  std::optional<BinaryGSpace> space;
  std::optional<WindowedIntSpace> windowed;
};

/// Returns std::nullopt when `name` is not a gallery name. Throws on a
/// recognized name with bad parameters.
std::optional<GalleryEntry> resolve_gallery(const std::string& name);

/// "z<n>", "d<m>", "s<n>", "klein" (alias "z2xz2"), "s3p" (presented S_3).
std::optional<FiniteGroup> parse_group_name(const std::string& name);

/// Element list "a,b,c" resolved against group names, then indices.
std::vector<Index> parse_element_list(const FiniteGroup& group, const std::string& list);

/// Gallery names with a one-line description each.
std::vector<std::pair<std::string, std::string>> gallery_catalog();

}  // namespace binact
