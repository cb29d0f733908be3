// Root data of reductive groups, presented as a product of simple Dynkin
// types times a central torus. Simple roots carry global indices 0..#S-1;
// roots are integer vectors in simple-root coordinates.
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace horofan {

using IndexSet = std::set<std::size_t>;
using Root = std::vector<long>;

enum class DynkinType { A, B, C, D, E, F, G };

char type_letter(DynkinType t);

struct SimpleComponent {
  DynkinType type;
  std::size_t rank;
  std::vector<std::size_t> nodes;      // global simple-root indices, in Bourbaki order
  std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>, local indices
};

class RootDatum {
 public:
  RootDatum() = default;
  RootDatum(const std::vector<std::pair<DynkinType, std::size_t>>& types, std::size_t torus_rank);

  /// "A2", "B3xG2", or "" for a torus.
  static RootDatum parse(const std::string& descriptor, std::size_t torus_rank);

  const std::vector<SimpleComponent>& components() const { return components_; }
  std::size_t torus_rank() const { return torus_rank_; }
  std::size_t simple_root_count() const { return labels_.size(); }
  /// Rank of the character lattice of the maximal torus.
  std::size_t weight_rank() const { return simple_root_count() + torus_rank_; }

  /// <alpha_j, alpha_i^vee>; zero across components.
  int cartan(std::size_t i, std::size_t j) const;
  bool adjacent(std::size_t i, std::size_t j) const { return i != j && cartan(i, j) != 0; }
  std::size_t component_of(std::size_t i) const { return component_of_[i]; }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::string descriptor() const;

  /// Positive roots, ordered by component, then height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  /// <gamma, alpha_i^vee>
  long pairing(const Root& gamma, std::size_t i) const;
  /// #(R+ minus R_I+)
  std::size_t flag_dimension(const IndexSet& I) const;

  /// Levi subdatum on the simple roots J with the given torus rank. Node labels
  /// are inherited; levi_index[k] is the parent index of the k-th Levi node.
  RootDatum levi(const IndexSet& J, std::size_t torus_rank, std::vector<std::size_t>* levi_index = nullptr) const;

  /// Product group; the second factor's simple roots follow the first's.
  friend RootDatum product(const RootDatum& a, const RootDatum& b);
  friend bool operator==(const RootDatum& a, const RootDatum& b);

 private:
  void finish();

  std::vector<SimpleComponent> components_;
  std::size_t torus_rank_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::size_t> component_of_, local_index_;
  std::vector<Root> positive_roots_;
};

/// Cartan matrix of a simple type in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(DynkinType type, std::size_t rank);

struct SmoothnessVerdict {
  bool smooth = true;
  std::string clause;      // "a", "b" or "c" when not smooth
  std::string diagnostic;
};

/// Dynkin-diagram side of the smoothness criterion for colours F outside I.
SmoothnessVerdict colour_smoothness_check(const RootDatum& d, const IndexSet& I, const IndexSet& F);

/// Connected components of I in the Dynkin diagram, each sorted.
std::vector<IndexSet> diagram_components(const RootDatum& d, const IndexSet& I);

}  // namespace horofan
