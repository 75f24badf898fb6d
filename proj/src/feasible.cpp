#include "spherical/feasible.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace spherical {

namespace {

struct Row {
  VecZ a;   // integral, primitive
  Rel rel;
};

// Scale to coprime integer coefficients (positive factor only: relations are
// not symmetric under sign flips).
bool normalize(const VecQ& in, Rel rel, Row& out) {
  if (is_zero(in)) {
    out.a = VecZ::Zero(in.size());
    out.rel = rel;
    return true;
  }
  out.a = primitive(in);
  out.rel = rel;
  return true;
}

// 0 REL 0 always holds for EQ/GE, never for GT.
bool zero_row_ok(Rel rel) { return rel != Rel::GT; }

struct RowKey {
  std::vector<std::string> k;
  bool operator<(const RowKey& o) const { return k < o.k; }
};

RowKey key_of(const VecZ& a) {
  RowKey k;
  k.k.reserve(static_cast<size_t>(a.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i) k.k.push_back(a(i).get_str());
  return k;
}

// Keeps the strongest relation per coefficient vector (GT beats GE; an EQ row
// is kept separately since it is not comparable).
void dedupe(std::vector<Row>& rows) {
  std::map<std::pair<RowKey, bool>, size_t> seen;  // (coeffs, is_eq) -> index
  std::vector<Row> out;
  for (auto& r : rows) {
    auto key = std::make_pair(key_of(r.a), r.rel == Rel::EQ);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(std::move(r));
    } else if (r.rel == Rel::GT) {
      out[it->second].rel = Rel::GT;
    }
  }
  rows = std::move(out);
}

}  // namespace

Feasibility solve_homogeneous(std::vector<LinRow> input, Eigen::Index nvars) {
  std::vector<Row> rows;
  rows.reserve(input.size());
  for (auto& r : input) {
    if (r.a.size() != nvars) throw std::invalid_argument("solve_homogeneous: row size mismatch");
    Row row;
    normalize(r.a, r.rel, row);
    if (is_zero(row.a)) {
      if (!zero_row_ok(row.rel)) return {false, {}};
      continue;
    }
    rows.push_back(std::move(row));
  }

  // Stage 1: eliminate variables pinned by equalities.
  // subst[i] records, for pivot variable p_i: x_{p_i} = expr_i . x (rational),
  // applied in reverse when reconstructing the witness.
  struct Subst {
    Eigen::Index var;
    VecQ expr;  // over all nvars; entries at already-pinned vars are zero
  };
  std::vector<Subst> substs;
  std::vector<bool> pinned(static_cast<size_t>(nvars), false);

  auto apply_subst = [&](std::vector<Row>& rs, const Subst& s) {
    std::vector<Row> out;
    out.reserve(rs.size());
    for (auto& r : rs) {
      if (r.a(s.var) == 0) {
        out.push_back(std::move(r));
        continue;
      }
      VecQ q = to_q(r.a);
      Rat c = q(s.var);
      q(s.var) = 0;
      q += c * s.expr;
      Row nr;
      if (is_zero(q)) {
        if (!zero_row_ok(r.rel)) return std::optional<std::vector<Row>>();
        continue;
      }
      normalize(q, r.rel, nr);
      out.push_back(std::move(nr));
    }
    return std::optional<std::vector<Row>>(std::move(out));
  };

  for (;;) {
    auto eq = std::find_if(rows.begin(), rows.end(), [](const Row& r) { return r.rel == Rel::EQ; });
    if (eq == rows.end()) break;
    Row e = *eq;
    rows.erase(eq);
    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < nvars; ++i)
      if (e.a(i) != 0) { p = i; break; }
    // x_p = -(rest)/coef
    Subst s;
    s.var = p;
    s.expr = VecQ::Zero(nvars);
    for (Eigen::Index i = 0; i < nvars; ++i)
      if (i != p && e.a(i) != 0) s.expr(i) = Rat(-e.a(i)) / Rat(e.a(p));
    auto next = apply_subst(rows, s);
    if (!next) return {false, {}};
    rows = std::move(*next);
    pinned[static_cast<size_t>(p)] = true;
    substs.push_back(std::move(s));
  }
  dedupe(rows);

  // Stage 2: Fourier-Motzkin on the remaining inequalities.
  std::vector<Eigen::Index> order;  // elimination order
  std::vector<std::vector<Row>> levels;  // rows present when order[k] was eliminated

  std::vector<Eigen::Index> remaining;
  for (Eigen::Index i = 0; i < nvars; ++i)
    if (!pinned[static_cast<size_t>(i)]) remaining.push_back(i);

  while (!remaining.empty()) {
    // Pick the variable minimizing the pos*neg fill-in.
    Eigen::Index best_var = -1;
    size_t best_cost = 0;
    for (Eigen::Index v : remaining) {
      size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a(v) > 0) ++pos;
        else if (r.a(v) < 0) ++neg;
      }
      size_t cost = pos * neg;
      if (best_var < 0 || cost < best_cost) {
        best_var = v;
        best_cost = cost;
      }
    }
    const Eigen::Index v = best_var;
    remaining.erase(std::find(remaining.begin(), remaining.end(), v));

    std::vector<Row> pos, neg, rest;
    for (auto& r : rows) {
      if (r.a(v) > 0) pos.push_back(std::move(r));
      else if (r.a(v) < 0) neg.push_back(std::move(r));
      else rest.push_back(std::move(r));
    }
    order.push_back(v);
    {
      std::vector<Row> level;
      level.reserve(pos.size() + neg.size());
      for (const auto& r : pos) level.push_back(r);
      for (const auto& r : neg) level.push_back(r);
      levels.push_back(std::move(level));
    }

    std::vector<Row> next = std::move(rest);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // p.a(v) > 0, n.a(v) < 0; combination removes x_v with positive
        // multipliers, so the relation tightens to GT when either is strict.
        VecQ c = to_q(p.a) * Rat(-n.a(v)) + to_q(n.a) * Rat(p.a(v));
        Rel rel = (p.rel == Rel::GT || n.rel == Rel::GT) ? Rel::GT : Rel::GE;
        if (is_zero(c)) {
          if (!zero_row_ok(rel)) return {false, {}};
          continue;
        }
        Row nr;
        normalize(c, rel, nr);
        next.push_back(std::move(nr));
      }
    dedupe(next);
    rows = std::move(next);
  }

  // All variables gone; surviving rows have zero coefficients and were
  // filtered on creation, so the system is feasible.
  VecQ x = VecQ::Zero(nvars);

  // Reconstruct FM-eliminated variables in reverse order.
  for (size_t k = order.size(); k-- > 0;) {
    const Eigen::Index v = order[k];
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo = 0, hi = 0;
    for (const auto& r : levels[k]) {
      Rat rest = 0;
      for (Eigen::Index i = 0; i < nvars; ++i)
        if (i != v && r.a(i) != 0) rest += Rat(r.a(i)) * x(i);
      Rat bound = -rest / Rat(r.a(v));
      if (r.a(v) > 0) {
        // x_v >= bound (or >)
        if (!has_lo || bound > lo || (bound == lo && r.rel == Rel::GT)) {
          if (!has_lo || bound > lo) lo_strict = (r.rel == Rel::GT);
          else lo_strict = lo_strict || (r.rel == Rel::GT);
          lo = bound;
          has_lo = true;
        }
      } else {
        if (!has_hi || bound < hi || (bound == hi && r.rel == Rel::GT)) {
          if (!has_hi || bound < hi) hi_strict = (r.rel == Rel::GT);
          else hi_strict = hi_strict || (r.rel == Rel::GT);
          hi = bound;
          has_hi = true;
        }
      }
    }
    Rat val;
    if (has_lo && has_hi) {
      if (lo == hi) {
        if (lo_strict || hi_strict) throw std::logic_error("fourier-motzkin: empty back-substitution interval");
        val = lo;
      } else {
        val = (lo + hi) / 2;
      }
    } else if (has_lo) {
      val = lo_strict ? lo + 1 : lo;
    } else if (has_hi) {
      val = hi_strict ? hi - 1 : hi;
    } else {
      val = 0;
    }
    x(v) = val;
  }

  // Equality substitutions, most recent first.
  for (size_t k = substs.size(); k-- > 0;) {
    const auto& s = substs[k];
    Rat val = 0;
    for (Eigen::Index i = 0; i < nvars; ++i)
      if (s.expr(i) != 0) val += s.expr(i) * x(i);
    x(s.var) = val;
  }

  // Exactness allows verifying the witness against the original rows.
  for (const auto& r : input) {
    Rat val = 0;
    for (Eigen::Index i = 0; i < nvars; ++i)
      if (r.a(i) != 0) val += r.a(i) * x(i);
    bool ok = (r.rel == Rel::EQ) ? (val == 0) : (r.rel == Rel::GE ? val >= 0 : val > 0);
    if (!ok) throw std::logic_error("fourier-motzkin: witness verification failed");
  }
  return {true, x};
}

}  // namespace spherical
