#include "sarkisov/links.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sarkisov {

const char* sarkisov_type_name(SarkisovType t) {
  switch (t) {
    case SarkisovType::I: return "I";
    case SarkisovType::II: return "II";
    case SarkisovType::III: return "III";
    case SarkisovType::IV: return "IV";
  }
  return "?";
}

std::string SarkisovLink::id_str() const {
  std::string s = "S" + std::to_string(id);
  if (inverse) s += "^-1";
  return s;
}

namespace {

SarkisovType inverse_type(SarkisovType t) {
  switch (t) {
    case SarkisovType::I: return SarkisovType::III;
    case SarkisovType::III: return SarkisovType::I;
    default: return t;
  }
}

SarkisovType catalog_type(int id) {
  switch (id) {
    case 1: case 2: case 3: case 4: case 8: return SarkisovType::IV;
    case 5: case 11: case 12: case 16: return SarkisovType::II;
    case 6: case 7: case 10: case 13: return SarkisovType::III;
    case 9: case 14: case 15: return SarkisovType::I;
  }
  throw link_error("unknown catalog id");
}

}  // namespace

const std::vector<CatalogEntry>& link_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {1, SarkisovType::IV, "F[0,0,0]", "F[0,0,0]",
       "always (two choices of factor pair)",
       "isomorphism of (P1)^3 over a different pair of factors"},
      {2, SarkisovType::IV, "R[0,0]", "P[0]", "always",
       "isomorphism of P2 x P1 exchanging the two fibrations"},
      {3, SarkisovType::IV, "S[1]", "S[1]", "always",
       "order-2 automorphism of the flag variety exchanging the two "
       "P2-fibrations"},
      {4, SarkisovType::IV, "F[0,b,0]", "F[b,0,0]", "b >= 2",
       "isomorphism F_b x P1 fibred over the two factors"},
      {5, SarkisovType::II, "S[b]", "S[b]", "b >= 3",
       "birational involution: blow up the invariant curve, contract the "
       "strict transform of E"},
      {6, SarkisovType::III, "P[2]", "P1112", "always",
       "contraction of the invariant divisor; the inverse is the reduced "
       "blow-up of the singular point"},
      {7, SarkisovType::III, "F[m-n,1,-n]", "R[m,n]",
       "m = n >= 1 or m > 2n >= 2",
       "contraction of the divisor x0=0 onto the invariant section"},
      {8, SarkisovType::IV, "R[1,1]", "R[1,1]", "always",
       "flop of the invariant section"},
      {9, SarkisovType::I, "P1123", "R[3,1]", "always",
       "reduced blow-up of [0:0:1:0] followed by a flip"},
      {10, SarkisovType::III, "W[2]", "P1123", "always",
       "contraction of the invariant section; the inverse is the weighted "
       "blow-up of [0:0:0:1]"},
      {11, SarkisovType::II, "F[a,b,c]", "F[a,b+1,c+a]",
       "a(c+a) > 0 and (ab > 0 or ac < 0)",
       "blow up the curve x0=y0=0, contract the strict transform of the "
       "surface over the negative section"},
      {12, SarkisovType::II, "U[a,b,c]", "U[a,b+1,c+a]",
       "every Umemura bundle",
       "blow up the curve x0=y0=0, contract the strict transform of the "
       "surface over the negative section"},
      {13, SarkisovType::III, "U[1,b,2]", "V[b]", "b >= 3",
       "fibrewise contraction descending the base F_1 -> P2"},
      {14, SarkisovType::I, "W[b]", "F[2,b-1,-1]", "b >= 2",
       "reduced blow-up of the singular point [1:0;0:0:1] followed by a flip"},
      {15, SarkisovType::I, "W[b]", "F[2,b,1]", "b >= 2",
       "reduced blow-up of the singular point [0:1;0:0:1] followed by a flip"},
      {16, SarkisovType::II, "Q[g]", "Q[g*h^2]",
       "deg g >= 4, g with at least three distinct roots, h a nonzero "
       "linear form",
       "blow up the conic over the zero of h, contract the strict transform "
       "of its fibre"},
  };
  return catalog;
}

namespace {

SarkisovLink make_link(int id, bool inv, const MoriFibreSpace& src,
                       const MoriFibreSpace& tgt, int step = 0, int variant = 1,
                       std::optional<BinaryForm> h = std::nullopt) {
  SarkisovLink l;
  l.id = id;
  l.inverse = inv;
  l.type = inv ? inverse_type(catalog_type(id)) : catalog_type(id);
  l.source = normalize(src);
  l.target = normalize(tgt);
  l.step = step;
  l.variant = variant;
  l.h = std::move(h);
  l.description = link_catalog()[static_cast<size_t>(id - 1)].description;
  return l;
}

[[noreturn]] void inapplicable(int id, bool inv, const MoriFibreSpace& s) {
  std::ostringstream os;
  os << "link S" << id << (inv ? "^-1" : "") << " is not applicable at "
     << space_key(s);
  throw link_error(os.str());
}

// Positive-normalized primitive linear form.
BinaryForm normalize_linear(const BinaryForm& h) {
  if (h.is_zero() || h.degree() != 1)
    throw link_error("payload must be a nonzero linear form");
  return h.primitive();
}

bool q_source_ok(const BinaryForm& g) {
  if (g.is_zero() || g.degree() < 4) return false;
  RootStats st = root_stats(g);
  return st.distinct_roots >= 3;
}

}  // namespace

MoriFibreSpace apply_link(const MoriFibreSpace& s0, int id, bool inv,
                          const std::optional<BinaryForm>& h_payload,
                          int variant) {
  (void)variant;
  MoriFibreSpace s = normalize(s0);
  auto is_family = [&s](Family f) { return s.family == f; };
  switch (id) {
    case 1:
      if (is_family(Family::F) && s.a == 0 && s.b == 0 && s.c == 0) return s;
      inapplicable(id, inv, s);
    case 2:
      if (!inv && is_family(Family::R) && s.a == 0 && s.b == 0)
        return MoriFibreSpace::P(0);
      if (inv && is_family(Family::P) && s.b == 0) return MoriFibreSpace::R(0, 0);
      inapplicable(id, inv, s);
    case 3:
      if (is_family(Family::S) && s.b == 1) return s;
      inapplicable(id, inv, s);
    case 4:
      if (!inv && is_family(Family::F) && s.a == 0 && s.b >= 2 && s.c == 0)
        return MoriFibreSpace::F(s.b, 0, 0);
      if (inv && is_family(Family::F) && s.a >= 2 && s.b == 0 && s.c == 0)
        return normalize(MoriFibreSpace::F(0, s.a, 0));
      inapplicable(id, inv, s);
    case 5:
      if (is_family(Family::S) && s.b >= 3) return s;
      inapplicable(id, inv, s);
    case 6:
      if (!inv && is_family(Family::P) && s.b == 2)
        return MoriFibreSpace::make(Family::P1112);
      if (inv && is_family(Family::P1112)) return MoriFibreSpace::P(2);
      inapplicable(id, inv, s);
    case 7: {
      if (!inv && is_family(Family::F) && s.b == 1 && s.c < 0) {
        long long n = -s.c, m = s.a + n;
        if ((m == n && n >= 1) || (m > 2 * n && n >= 1))
          return normalize(MoriFibreSpace::R(m, n));
      }
      // Normalized F[0,b,-1] stands for F[0,1,-b]; it maps to R[b,b].
      if (!inv && is_family(Family::F) && s.a == 0 && s.c == -1 && s.b >= 2)
        return MoriFibreSpace::R(s.b, s.b);
      if (inv && is_family(Family::R)) {
        long long m = s.a, n = s.b;
        if ((m == n && n >= 1) || (m > 2 * n && n >= 1))
          return normalize(MoriFibreSpace::F(m - n, 1, -n));
      }
      inapplicable(id, inv, s);
    }
    case 8:
      if (is_family(Family::R) && s.a == 1 && s.b == 1) return s;
      inapplicable(id, inv, s);
    case 9:
      if (!inv && is_family(Family::P1123)) return MoriFibreSpace::R(3, 1);
      if (inv && is_family(Family::R) && s.a == 3 && s.b == 1)
        return MoriFibreSpace::make(Family::P1123);
      inapplicable(id, inv, s);
    case 10:
      if (!inv && is_family(Family::W) && s.b == 2)
        return MoriFibreSpace::make(Family::P1123);
      if (inv && is_family(Family::P1123)) return MoriFibreSpace::W(2);
      inapplicable(id, inv, s);
    case 11: {
      if (!is_family(Family::F)) inapplicable(id, inv, s);
      long long a = s.a, b = s.b, c = s.c;
      if (!inv) {
        if (a * (c + a) > 0 && (a * b > 0 || a * c < 0))
          return normalize(MoriFibreSpace::F(a, b + 1, c + a));
      } else {
        // Inverse of the catalog link at F[a,b-1,c-a].
        long long pb = b - 1, pc = c - a;
        if (pb >= 0 && a * c > 0 && (a * pb > 0 || a * pc < 0))
          return normalize(MoriFibreSpace::F(a, pb, pc));
      }
      inapplicable(id, inv, s);
    }
    case 12: {
      if (!is_family(Family::U)) inapplicable(id, inv, s);
      MoriFibreSpace t = inv ? MoriFibreSpace::U(s.a, s.b - 1, s.c - s.a)
                             : MoriFibreSpace::U(s.a, s.b + 1, s.c + s.a);
      if (validate(t).ok) return t;
      inapplicable(id, inv, s);
    }
    case 13:
      if (!inv && is_family(Family::U) && s.a == 1 && s.c == 2 && s.b >= 3)
        return MoriFibreSpace::V(s.b);
      if (inv && is_family(Family::V) && s.b >= 3)
        return MoriFibreSpace::U(1, s.b, 2);
      inapplicable(id, inv, s);
    case 14:
      if (!inv && is_family(Family::W))
        return normalize(MoriFibreSpace::F(2, s.b - 1, -1));
      if (inv && is_family(Family::F) && s.a == 2 && s.c == -1 && s.b >= 1)
        return MoriFibreSpace::W(s.b + 1);
      inapplicable(id, inv, s);
    case 15:
      if (!inv && is_family(Family::W))
        return normalize(MoriFibreSpace::F(2, s.b, 1));
      if (inv && is_family(Family::F) && s.a == 2 && s.c == 1 && s.b >= 2)
        return MoriFibreSpace::W(s.b);
      inapplicable(id, inv, s);
    case 16: {
      if (!is_family(Family::Q)) inapplicable(id, inv, s);
      if (!h_payload) throw link_error("S16 requires the linear-form payload");
      BinaryForm h = normalize_linear(*h_payload);
      if (!inv) {
        if (!q_source_ok(s.g)) inapplicable(id, inv, s);
        return normalize(MoriFibreSpace::Q(s.g * h * h));
      }
      if (!divides(h * h, s.g)) inapplicable(id, inv, s);
      BinaryForm quo = divide_exact(s.g, h * h);
      if (!q_source_ok(quo)) inapplicable(id, inv, s);
      return normalize(MoriFibreSpace::Q(quo));
    }
    default:
      throw link_error("unknown catalog id S" + std::to_string(id));
  }
}

MoriFibreSpace apply_link(const MoriFibreSpace& s, const SarkisovLink& link) {
  return apply_link(s, link.id, link.inverse, link.h, link.variant);
}

SarkisovLink inverse(const SarkisovLink& link) {
  SarkisovLink inv = link;
  std::swap(inv.source, inv.target);
  inv.inverse = !link.inverse;
  inv.type = inverse_type(link.type);
  inv.step = -link.step;
  return inv;
}

namespace {

void sort_links(std::vector<SarkisovLink>& links) {
  std::sort(links.begin(), links.end(),
            [](const SarkisovLink& x, const SarkisovLink& y) {
              auto key = [](const SarkisovLink& l) {
                return std::make_tuple(l.id, l.inverse, l.variant,
                                       space_key(l.target),
                                       l.h ? l.h->str() : std::string());
              };
              return key(x) < key(y);
            });
}

}  // namespace

LinkEnumeration enumerate_links(const MoriFibreSpace& s0) {
  MoriFibreSpace s = normalize(s0);
  LinkEnumeration out;

  MaximalityVerdict verdict = is_maximal(s);
  if (verdict.status != Maximality::Maximal) {
    WitnessResult w = non_maximality_witness(s);
    out.not_maximal_witness = w.witness;
    out.off_list = (w.kind == WitnessKind::OffList);
    return out;
  }

  auto add = [&](int id, bool inv, const MoriFibreSpace& tgt, int step = 0,
                 int variant = 1, std::optional<BinaryForm> h = std::nullopt) {
    out.links.push_back(make_link(id, inv, s, tgt, step, variant, std::move(h)));
  };

  switch (s.family) {
    case Family::P3:
    case Family::Q3:
      break;
    case Family::P1112:
      add(6, true, MoriFibreSpace::P(2));
      break;
    case Family::P1123:
      add(9, false, MoriFibreSpace::R(3, 1));
      add(10, true, MoriFibreSpace::W(2));
      break;
    case Family::P:
      if (s.b == 0) add(2, true, MoriFibreSpace::R(0, 0));
      else if (s.b == 2) add(6, false, MoriFibreSpace::make(Family::P1112));
      break;
    case Family::S:
      if (s.b == 1) add(3, false, s);
      else add(5, false, s);
      break;
    case Family::V:
      add(13, true, MoriFibreSpace::U(1, s.b, 2));
      break;
    case Family::W:
      if (s.b == 2) add(10, false, MoriFibreSpace::make(Family::P1123));
      add(14, false, normalize(MoriFibreSpace::F(2, s.b - 1, -1)));
      add(15, false, normalize(MoriFibreSpace::F(2, s.b, 1)));
      break;
    case Family::R: {
      long long m = s.a, n = s.b;
      if (m == 0 && n == 0) {
        add(2, false, MoriFibreSpace::P(0));
      } else if (n == 0) {
        // m >= 2: no equivariant links.
      } else {
        add(7, true, normalize(MoriFibreSpace::F(m - n, 1, -n)));
        if (m == 1 && n == 1) add(8, false, s);
        if (m == 3 && n == 1) add(9, true, MoriFibreSpace::make(Family::P1123));
      }
      break;
    }
    case Family::F: {
      long long a = s.a, b = s.b, c = s.c;
      if (a == 0) {
        if (b == 0 && c == 0) {
          add(1, false, s, 0, 1);
          add(1, false, s, 0, 2);
        } else if (b == 1 && c == -1) {
          add(7, false, MoriFibreSpace::R(1, 1), 0, 1);
          add(7, false, MoriFibreSpace::R(1, 1), 0, 2);
        } else if (c == 0 && b >= 2) {
          add(4, false, MoriFibreSpace::F(b, 0, 0));
        } else if (c == -1 && b >= 2) {
          add(7, false, MoriFibreSpace::R(b, b));
        }
        // No equivariant links from the remaining maximal F[0,b,c].
      } else {
        if (b == 0 && c == 0) {
          add(4, true, normalize(MoriFibreSpace::F(0, a, 0)));
        } else {
          // -a < c < a(b-1), b >= 1.
          add(11, false, normalize(MoriFibreSpace::F(a, b + 1, c + a)), +1);
          if (c > 0)
            add(11, true, normalize(MoriFibreSpace::F(a, b - 1, c - a)), -1);
          if (b == 1) add(7, false, normalize(MoriFibreSpace::R(a - c, -c)));
          if (a == 2 && c == -1) add(14, true, MoriFibreSpace::W(b + 1));
          if (a == 2 && c == 1) add(15, true, MoriFibreSpace::W(b));
        }
      }
      break;
    }
    case Family::U: {
      long long a = s.a, b = s.b, c = s.c;
      add(12, false, MoriFibreSpace::U(a, b + 1, c + a), +1);
      if (b >= 2 && c >= a + 2) add(12, true, MoriFibreSpace::U(a, b - 1, c - a), -1);
      if (a == 1 && c == 2) add(13, false, MoriFibreSpace::V(b));
      break;
    }
    case Family::Q: {
      out.infinite_family =
          "S16 -> Q[g*h^2] for every nonzero linear form h (type II)";
      bool irrational_repeated = false;
      for (const auto& layer : squarefree_decomposition(s.g)) {
        if (layer.multiplicity < 2) continue;
        auto linears = rational_linear_factors(layer.factor);
        int rational_roots = static_cast<int>(linears.size());
        if (rational_roots < layer.factor.degree()) irrational_repeated = true;
        for (const auto& l : linears) {
          BinaryForm quo = divide_exact(s.g, l * l);
          if (q_source_ok(quo))
            add(16, true, normalize(MoriFibreSpace::Q(quo)), 0, 1, l);
        }
      }
      if (irrational_repeated)
        out.extension_note = "links over extension fields — not enumerated";
      break;
    }
  }
  sort_links(out.links);
  return out;
}

namespace {

// Expansion order for the deterministic search: catalog id descending,
// forward before inverse, then variant and target key.
std::vector<SarkisovLink> ordered_neighbors(const MoriFibreSpace& s,
                                            int max_q_degree) {
  LinkEnumeration e = enumerate_links(s);
  std::vector<SarkisovLink> links = e.links;
  if (s.family == Family::Q && e.infinite_family) {
    // Instantiate the forward family over primitive linear forms of
    // coefficient height <= 3, capped by the target degree.
    if (s.g.degree() + 2 <= max_q_degree) {
      std::vector<BinaryForm> forms;
      for (long long p = -3; p <= 3; ++p)
        for (long long q = -3; q <= 3; ++q) {
          if (p == 0 && q == 0) continue;
          if (std::gcd(std::llabs(p), std::llabs(q)) != 1) continue;
          BinaryForm h = BinaryForm::linear(mpq_class(static_cast<long>(p)),
                                            mpq_class(static_cast<long>(q)))
                             .primitive();
          if (std::find(forms.begin(), forms.end(), h) == forms.end())
            forms.push_back(h);
        }
      std::sort(forms.begin(), forms.end(),
                [](const BinaryForm& x, const BinaryForm& y) {
                  return x.str() < y.str();
                });
      for (const auto& h : forms) {
        MoriFibreSpace tgt = apply_link(s, 16, false, h);
        links.push_back(make_link(16, false, s, tgt, 0, 1, h));
      }
    }
  }
  std::sort(links.begin(), links.end(),
            [](const SarkisovLink& x, const SarkisovLink& y) {
              auto key = [](const SarkisovLink& l) {
                return std::make_tuple(-l.id, l.inverse, l.variant,
                                       space_key(l.target),
                                       l.h ? l.h->str() : std::string());
              };
              return key(x) < key(y);
            });
  return links;
}

}  // namespace

std::optional<std::vector<SarkisovLink>> find_path(const MoriFibreSpace& src0,
                                                   const MoriFibreSpace& dst0,
                                                   int max_depth,
                                                   int max_q_degree) {
  MoriFibreSpace src = normalize(src0), dst = normalize(dst0);
  if (is_maximal(src).status != Maximality::Maximal ||
      is_maximal(dst).status != Maximality::Maximal)
    throw link_error("find_path requires maximal endpoints");
  std::string goal = space_key(dst);
  if (space_key(src) == goal) return std::vector<SarkisovLink>{};

  struct Visit {
    MoriFibreSpace space;
    int depth;
  };
  std::deque<Visit> frontier;
  std::map<std::string, std::pair<std::string, SarkisovLink>> parent;
  std::set<std::string> seen;
  frontier.push_back({src, 0});
  seen.insert(space_key(src));

  auto reconstruct = [&](const std::string& key) {
    std::vector<SarkisovLink> path;
    std::string cur = key;
    while (cur != space_key(src)) {
      auto it = parent.find(cur);
      path.push_back(it->second.second);
      cur = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!frontier.empty()) {
    Visit v = frontier.front();
    frontier.pop_front();
    if (v.depth >= max_depth) continue;
    std::string vkey = space_key(v.space);
    for (const SarkisovLink& l : ordered_neighbors(v.space, max_q_degree)) {
      std::string tkey = space_key(l.target);
      if (seen.count(tkey)) continue;
      seen.insert(tkey);
      parent.emplace(tkey, std::make_pair(vkey, l));
      if (tkey == goal) return reconstruct(tkey);
      frontier.push_back({l.target, v.depth + 1});
    }
  }
  return std::nullopt;
}

MoriFibreSpace canonical_representative(const MoriFibreSpace& s0) {
  MoriFibreSpace s = normalize(s0);
  if (is_maximal(s).status != Maximality::Maximal)
    throw link_error("canonical_representative requires a maximal space");
  if (s.family == Family::Q)
    return normalize(MoriFibreSpace::Q(odd_part(s.g)));
  if (s.family == Family::F || s.family == Family::U) {
    for (;;) {
      LinkEnumeration e = enumerate_links(s);
      bool stepped = false;
      for (const SarkisovLink& l : e.links) {
        if ((l.id == 11 || l.id == 12) && l.step == -1) {
          s = l.target;
          stepped = true;
          break;
        }
      }
      if (!stepped) return s;
    }
  }
  return s;
}

std::string neighborhood_dot(const MoriFibreSpace& s0, int radius,
                             int max_q_degree) {
  MoriFibreSpace s = normalize(s0);
  std::ostringstream os;
  os << "digraph links {\n";
  os << "  node [shape=box];\n";
  std::set<std::string> seen{space_key(s)};
  std::set<std::string> edges;
  std::deque<std::pair<MoriFibreSpace, int>> frontier{{s, 0}};
  while (!frontier.empty()) {
    auto [cur, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= radius) continue;
    if (is_maximal(cur).status != Maximality::Maximal) continue;
    for (const SarkisovLink& l : ordered_neighbors(cur, max_q_degree)) {
      std::string tkey = space_key(l.target);
      std::ostringstream e;
      e << "  \"" << space_key(cur) << "\" -> \"" << tkey << "\" [label=\""
        << l.id_str() << "\"];\n";
      edges.insert(e.str());
      if (!seen.count(tkey)) {
        seen.insert(tkey);
        frontier.push_back({l.target, depth + 1});
      }
    }
  }
  for (const auto& n : seen) os << "  \"" << n << "\";\n";
  for (const auto& e : edges) os << e;
  os << "}\n";
  return os.str();
}

}  // namespace sarkisov
