#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace globop {

enum class Side { source, target };

/// One failed check, attached to the cell where it was detected.
struct Violation {
  int dim = 0;
  std::string cell;
  std::string message;
};

struct Report {
  std::vector<Violation> issues;
  bool ok() const { return issues.empty(); }
  void add(int dim, std::string cell, std::string message) {
    issues.push_back({dim, std::move(cell), std::move(message)});
  }
  void merge(const Report& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
  std::string to_string() const;
};

/// A finite globular set truncated at max_dim. Cells are interned strings,
/// kept in insertion order so every traversal is deterministic.
class GlobularSet {
 public:
  explicit GlobularSet(int max_dim);
  GlobularSet() : GlobularSet(0) {}

  int max_dim() const { return max_dim_; }

  void add_cell(int dim, const std::string& name);
  void add_cell(int dim, const std::string& name, const std::string& src,
                const std::string& tgt);

  const std::vector<std::string>& cells(int dim) const;
  bool has_cell(int dim, const std::string& name) const;
  const std::string& src(int dim, const std::string& name) const;
  const std::string& tgt(int dim, const std::string& name) const;

  /// Iterated boundary of a cell down to dimension k.
  const std::string& boundary(int dim, const std::string& name, int k,
                              Side side) const;

  bool operator==(const GlobularSet&) const = default;

 private:
  int max_dim_;
  std::vector<std::vector<std::string>> cells_;
  std::vector<std::map<std::string, std::string>> src_, tgt_;
};

Report validate_globular(const GlobularSet& g);

/// True iff every dimension carries the same cells and src/tgt are identities.
bool is_constant(const GlobularSet& g);

class ColoredGlobularSet {
 public:
  ColoredGlobularSet(GlobularSet base, int n_colors)
      : base_(std::move(base)), n_colors_(n_colors) {}
  ColoredGlobularSet() : n_colors_(1) {}

  const GlobularSet& base() const { return base_; }
  GlobularSet& base() { return base_; }
  int n_colors() const { return n_colors_; }

  void set_color(int dim, const std::string& cell, int color);
  int color(int dim, const std::string& cell) const;

 private:
  GlobularSet base_;
  int n_colors_;
  std::map<std::pair<int, std::string>, int> color_;
};

Report validate_colored(const ColoredGlobularSet& g);

/// Pullback along the j-th point of the color coproduct.
GlobularSet color_restrict(const ColoredGlobularSet& g, int j);

/// A dimensionwise cell map G -> H; f[k] sends k-cells to k-cells.
using CellMap = std::vector<std::map<std::string, std::string>>;

bool check_morphism(const GlobularSet& g, const GlobularSet& h,
                    const CellMap& f, Report* why = nullptr);

CellMap identity_map(const GlobularSet& g);
CellMap compose_maps(const CellMap& second, const CellMap& first);

}  // namespace globop
