// The catalog of elementary equivariant links S1-S16 between the classified
// Mori fibre spaces: per-space enumeration, application and inversion of the
// parameter rewrites, canonical representatives of link components, and
// bounded breadth-first path search.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarkisov/binary_form.hpp"
#include "sarkisov/spaces.hpp"

namespace sarkisov {

class link_error : public std::runtime_error {
 public:
  explicit link_error(const std::string& what) : std::runtime_error(what) {}
};

enum class SarkisovType { I, II, III, IV };
const char* sarkisov_type_name(SarkisovType t);

struct SarkisovLink {
  int id = 0;            // 1..16
  bool inverse = false;  // stored direction relative to the catalog direction
  SarkisovType type = SarkisovType::IV;  // type of the stored direction
  MoriFibreSpace source;
  MoriFibreSpace target;
  int step = 0;                  // S11/S12: +1 (up) or -1 (down)
  int variant = 1;               // distinguishes coexisting equal-id links
  std::optional<BinaryForm> h;   // S16 payload: a nonzero linear form
  std::string description;

  std::string id_str() const;  // "S9", "S10^-1"
};

struct CatalogEntry {
  int id;
  SarkisovType type;
  std::string source_shape;
  std::string target_shape;
  std::string applicability;
  std::string description;
};

// Static descriptors of the sixteen catalog links.
const std::vector<CatalogEntry>& link_catalog();

struct LinkEnumeration {
  std::vector<SarkisovLink> links;
  // Q only: the forward family over all linear forms, as a descriptor.
  std::optional<std::string> infinite_family;
  // Set when the space is not maximal: the reduction witness, flagged.
  std::optional<NonMaximalityWitness> not_maximal_witness;
  bool off_list = false;
  // Q only: repeated irrational factors admit links only over extension
  // fields; they are reported, not enumerated.
  std::optional<std::string> extension_note;
};

// The complete finite list of equivariant links starting from a maximal
// space, ordered by catalog id, direction, variant, and target.
LinkEnumeration enumerate_links(const MoriFibreSpace& s);

// Applies one catalog link (or its inverse) at a space. The applicability
// predicate must hold; S16 requires the linear-form payload.
MoriFibreSpace apply_link(const MoriFibreSpace& s, int id, bool inverse,
                          const std::optional<BinaryForm>& h = std::nullopt,
                          int variant = 1);
MoriFibreSpace apply_link(const MoriFibreSpace& s, const SarkisovLink& link);

SarkisovLink inverse(const SarkisovLink& link);

// Shortest link path between two maximal spaces, breadth-first over the
// finite enumerations plus bounded instantiations of the forward Q-family
// (payload coefficient height <= 3, target degree <= max_q_degree).
// Deterministic; nullopt when no path exists within max_depth.
std::optional<std::vector<SarkisovLink>> find_path(const MoriFibreSpace& src,
                                                   const MoriFibreSpace& dst,
                                                   int max_depth = 6,
                                                   int max_q_degree = 12);

// Deterministic base point of a link component: odd part for Q, the fixed
// point of descending elementary links for F and U, normal form otherwise.
MoriFibreSpace canonical_representative(const MoriFibreSpace& s);

// DOT rendering of the radius-r link neighborhood of a space.
std::string neighborhood_dot(const MoriFibreSpace& s, int radius,
                             int max_q_degree = 12);

}  // namespace sarkisov
