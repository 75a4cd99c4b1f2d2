#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

/// Parameters of H(n,k,a): clique on A∪C (|A|=a, |C|=k-2a) plus an
/// independent set B (|B|=n-k+a) fully joined to A.
struct HParams {
  int n = 0, k = 0, a = 0;
};

/// Vertex order A, B, C. Throws OutOfDomain unless n >= k >= 2a >= 2.
Graph build_h(const HParams& p);

/// One K_{k-delta} and (n-k+delta)/(delta-1) copies of K_{delta+1}, all
/// sharing the same two vertices {0,1}.
Graph build_z(int n, int k, int delta);

/// Path on 2l-1 vertices plus three independent vertices joined to every
/// vertex of the larger partite set of the path.
Graph build_f_ell(int l);

/// m vertices carrying floor(m/2) disjoint edges.
Graph build_e(int m);

/// n-vertex graph made of two K_{l+1} blocks, floor((n-k+3)/2) edge blocks
/// and, when n-k+3 is odd, one single-vertex block, all glued on one shared
/// triangle C. Contains F4(k+1,k,l-2); clique counts equal g_s(n,k,s).
Graph build_gnk3(int n, int k);

enum class FamilyType { I, II, III, IV };
enum class SpecialTag { F0, F1, F2, F3, F4, F5 };

std::string to_string(FamilyType t);
std::string to_string(SpecialTag t);

/// Layout record of one family member. Vertices are ordered A, B, C, D with
/// C and D numbered by first appearance along the C∪D path(s).
struct FamilyDescriptor {
  FamilyType type = FamilyType::I;
  int m = 0, k = 0, r = 0;
  std::vector<int> A, B, C, D;
  std::vector<std::vector<int>> cd_paths;            // path(s) covering C∪D
  std::vector<std::pair<int, int>> a_non_edges;      // missing pairs in F[A∪C] touching A
  std::map<std::string, int> marks;                  // x, x1, x2, y, y1, y2, v, v1, v2, z, z', z1, z1', z2, z2', u1, w, w1, w2
  std::optional<SpecialTag> special;

  std::string summary() const;  // key=value lines
};

struct FamilyMember {
  FamilyDescriptor desc;
  Graph graph;
};

/// One representative per isomorphism class of F(m,k,r); every entry passes
/// validate_member. Sorted by canonical form.
std::vector<FamilyMember> enumerate_family(int m, int k, int r);

/// Named special members (F0..F5). Throws InvalidInput on a tag/parameter
/// mismatch. F3 returns the layout whose D-ended path has two D vertices.
FamilyMember build_special(SpecialTag tag, int m, int k, int r);

struct ValidationCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok = true;

  void add(const std::string& name, bool ok_, const std::string& detail = "");
};

/// Checks |V|=m, the per-type layout rules, c(g) < k and the existence of a
/// Hamilton path from A to B; failures are reported individually.
ValidationReport validate_member(const Graph& g, const FamilyDescriptor& d);

/// (k, alpha) plus the largest member order to generate.
struct KFamilySpec {
  int k = 0;
  int alpha = 0;
  int m_max = 0;  // defaults to k+1 when <= 0
};

/// Deduplicated members of K_{k,alpha} with at most m_max vertices, ordered
/// by (order, canonical form). alpha = 0 gives the empty family.
std::vector<Graph> enumerate_k_family(const KFamilySpec& spec);

/// Same list with human-readable member ids.
struct KFamilyMember {
  Graph graph;
  std::string id;
};
std::vector<KFamilyMember> enumerate_k_family_members(const KFamilySpec& spec);

/// First member of K_{k,alpha} (members ordered by order, then canonical
/// form) that embeds into g, with its id and embedding.
std::optional<std::pair<std::string, std::vector<int>>> find_k_family_member(
    const Graph& g, const KFamilySpec& spec);

}  // namespace egstab
