#pragma once

// Numeric oracle: at a rational point (q0, r0), the right action of every
// generator on the basis is a sparse matrix; the vectors v with v E_i = 0
// and v T_i = lambda v are found by linear algebra alone and compared with
// the specialized symbolic (anti)symmetrizer.
//
// The nullspace is computed modulo 62-bit primes. Over any prime the mod-p
// nullity bounds the rational nullity from above; a nullity-1 system whose
// CRT/rational-reconstructed null vector satisfies every equation exactly
// over Q therefore has a rational solution space of dimension exactly 1.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bmwkit/engine/engine.hpp"
#include "bmwkit/oracle/modular.hpp"
#include "bmwkit/symmetrizer/coeffs.hpp"

namespace bmwkit {

/// Right multiplication by one generator at a point; row m holds m * g.
struct SpecMatrix {
  Gen label;
  int dim = 0;
  std::vector<std::vector<std::pair<int, mpq_class>>> rows;
};

inline std::vector<SpecMatrix> build_action(PointEngine& eng) {
  const int n = eng.n();
  const int dim = static_cast<int>(eng.basis().size());
  std::vector<SpecMatrix> out;
  for (int i = 1; i < n; ++i)
    for (Gen g : {Gen{Gen::T, i}, Gen{Gen::E, i}}) {
      SpecMatrix m{g, dim, {}};
      m.rows.resize(static_cast<std::size_t>(dim));
      for (int k = 0; k < dim; ++k) {
        const auto& s = eng.rmul(k, g);
        m.rows[static_cast<std::size_t>(k)].assign(s.begin(), s.end());
      }
      out.push_back(std::move(m));
    }
  return out;
}

/// v * M for a row vector v.
inline std::vector<mpq_class> row_times(const std::vector<mpq_class>& v, const SpecMatrix& m) {
  std::vector<mpq_class> out(static_cast<std::size_t>(m.dim));
  for (int k = 0; k < m.dim; ++k) {
    if (sgn(v[static_cast<std::size_t>(k)]) == 0) continue;
    for (const auto& [j, c] : m.rows[static_cast<std::size_t>(k)]) out[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(k)] * c;
  }
  return out;
}

struct IdealSolution {
  /// Dimension of {v : v E_i = 0, v T_i = eigen v}; exact when 1 (see file
  /// comment), otherwise the mod-p upper bound.
  int dim = 0;
  std::vector<mpq_class> vector;  // generator when dim == 1
  int primes_used = 0;
};

namespace detail {

/// The equations as sparse rows over the unknowns v_m (one per generator
/// and basis column).
inline std::vector<std::vector<std::pair<int, mpq_class>>> ideal_equations(const std::vector<SpecMatrix>& mats,
                                                                           const mpq_class& eigen) {
  std::vector<std::vector<std::pair<int, mpq_class>>> eqs;
  for (const SpecMatrix& m : mats) {
    std::vector<std::vector<std::pair<int, mpq_class>>> cols(static_cast<std::size_t>(m.dim));
    for (int k = 0; k < m.dim; ++k)
      for (const auto& [j, c] : m.rows[static_cast<std::size_t>(k)]) cols[static_cast<std::size_t>(j)].emplace_back(k, c);
    if (m.label.kind == Gen::T)
      for (int j = 0; j < m.dim; ++j) {
        auto& col = cols[static_cast<std::size_t>(j)];
        bool found = false;
        for (auto& [k, c] : col)
          if (k == j) {
            c -= eigen;
            found = true;
          }
        if (!found) col.emplace_back(j, -eigen);
      }
    for (auto& col : cols) {
      std::erase_if(col, [](const auto& e) { return sgn(e.second) == 0; });
      if (!col.empty()) eqs.push_back(std::move(col));
    }
  }
  // short equations first keeps the echelon form sparse
  std::stable_sort(eqs.begin(), eqs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return eqs;
}

inline std::optional<modular::SparseRow> reduce_row(const std::vector<std::pair<int, mpq_class>>& row, modular::u64 p) {
  modular::SparseRow out;
  out.reserve(row.size());
  for (const auto& [k, c] : row) {
    auto v = modular::reduce(c, p);
    if (!v) return std::nullopt;
    if (*v) out.emplace_back(k, *v);
  }
  return out;
}

inline mpz_class to_mpz(modular::u64 x) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return z;
}

}  // namespace detail

inline IdealSolution solve_ideal(const std::vector<SpecMatrix>& mats, const mpq_class& eigen, int max_primes = 400) {
  if (mats.empty()) throw std::invalid_argument("solve_ideal: no matrices");
  const int dim = mats.front().dim;
  const auto eqs = detail::ideal_equations(mats, eigen);
  IdealSolution out;

  auto verify = [&](const std::vector<mpq_class>& v) {
    for (const SpecMatrix& m : mats) {
      auto w = row_times(v, m);
      const mpq_class lam = m.label.kind == Gen::T ? eigen : mpq_class(0);
      for (int j = 0; j < dim; ++j)
        if (w[static_cast<std::size_t>(j)] != lam * v[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  };

  // first prime: find independent equations until the nullity is 1
  std::vector<std::size_t> used;
  int free_col = -1;
  int k = 0;
  for (; k < max_primes && free_col < 0; ++k) {
    const modular::u64 p = modular::nth_prime(k);
    modular::Echelon ech(dim, p);
    used.clear();
    bool bad_prime = false;
    for (std::size_t e = 0; e < eqs.size() && ech.nullity() > 1; ++e) {
      auto row = detail::reduce_row(eqs[e], p);
      if (!row) {
        bad_prime = true;
        break;
      }
      if (ech.insert(*row)) used.push_back(e);
    }
    if (bad_prime) continue;
    ++out.primes_used;
    if (ech.nullity() != 1) {
      out.dim = ech.nullity();
      if (out.dim == 0) return out;
      continue;  // possibly an unlucky prime; try another
    }
    // The remaining equations either all vanish on the mod-p null vector or
    // cut the nullity to 0; rank mod p never exceeds rank over Q, so the
    // latter proves dim = 0.
    const int fc = ech.free_columns().front();
    const auto x = ech.null_vector(fc);
    bool all_vanish = true;
    for (std::size_t e = 0; e < eqs.size() && all_vanish && !bad_prime; ++e) {
      auto row = detail::reduce_row(eqs[e], p);
      if (!row) {
        bad_prime = true;
        break;
      }
      modular::u64 s = 0;
      for (const auto& [c, v] : *row) s = modular::addmod(s, modular::mulmod(v, x[static_cast<std::size_t>(c)], p), p);
      all_vanish = s == 0;
    }
    if (bad_prime) continue;
    if (!all_vanish) {
      out.dim = 0;
      return out;
    }
    free_col = fc;
  }
  if (free_col < 0) return out;

  // CRT over primes on the selected equations, then rational reconstruction
  std::vector<mpz_class> residue(static_cast<std::size_t>(dim));
  mpz_class modulus = 1;
  std::vector<mpq_class> last;
  for (k = 0; k < max_primes; ++k) {
    const modular::u64 p = modular::nth_prime(k);
    modular::Echelon ech(dim, p);
    bool bad_prime = false;
    for (std::size_t e : used) {
      auto row = detail::reduce_row(eqs[e], p);
      if (!row) {
        bad_prime = true;
        break;
      }
      ech.insert(*row);
    }
    if (bad_prime || ech.nullity() != 1) continue;
    const int fc = ech.free_columns().front();
    auto x = ech.null_vector(fc);
    if (x[static_cast<std::size_t>(free_col)] == 0) continue;
    const modular::u64 s = modular::invmod(x[static_cast<std::size_t>(free_col)], p);
    const mpz_class pz = detail::to_mpz(p);
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (int j = 0; j < dim; ++j) {
      const mpz_class xj = detail::to_mpz(modular::mulmod(x[static_cast<std::size_t>(j)], s, p));
      mpz_class t = ((xj - residue[static_cast<std::size_t>(j)]) % pz) * minv % pz;
      if (t < 0) t += pz;
      residue[static_cast<std::size_t>(j)] += modulus * t;
    }
    modulus *= pz;
    ++out.primes_used;

    std::vector<mpq_class> cand;
    cand.reserve(static_cast<std::size_t>(dim));
    bool ok = true;
    for (int j = 0; j < dim && ok; ++j) {
      auto r = modular::rational_reconstruction(residue[static_cast<std::size_t>(j)], modulus);
      if (!r) ok = false;
      else cand.push_back(*r);
    }
    if (!ok) continue;
    if (cand == last && verify(cand)) {
      out.dim = 1;
      out.vector = std::move(cand);
      return out;
    }
    last = std::move(cand);
  }
  throw std::runtime_error("solve_ideal: rational reconstruction did not stabilise");
}

/// Deterministic random point with numerators and denominators in [2, 17].
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  std::pair<mpq_class, mpq_class> next() {
    auto draw = [&]() {
      mpq_class x(static_cast<long>(2 + rng_() % 16), static_cast<unsigned long>(2 + rng_() % 16));
      x.canonicalize();
      return x;
    };
    mpq_class q = draw();
    mpq_class r = draw();
    return {q, r};
  }

 private:
  std::mt19937_64 rng_;
};

/// Coefficients of the (anti)symmetrizer at a point, built from the closed
/// form; PoleError if the point is a pole of some coefficient.
inline Element<mpq_class> specialized_symmetrizer(const Basis& basis, const PointField& field, Character which) {
  const int n = basis.n();
  const CoeffTable t = coeff_table(n);
  Element<mpq_class> out(n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Monomial& m = basis[k];
    RatFunc c = t.c[static_cast<std::size_t>(m.f)] * RatFunc::q(m.total_length());
    if (which == Character::rho2) c = c.flip_q();
    out.add_term(static_cast<int>(k), field.from(c));
  }
  return out;
}

struct OracleReport {
  int n = 0;
  mpq_class q0, r0;
  Character which = Character::rho1;
  int dim = 0;
  bool match = false;
  mpq_class scale;
  int primes_used = 0;

  nlohmann::json to_json() const {
    return {{"n", n},
            {"point", {{"q", q0.get_str()}, {"r", r0.get_str()}}},
            {"character", which == Character::rho1 ? "rho1" : "rho2"},
            {"dim", dim},
            {"match", match},
            {"scale", scale.get_str()}};
  }
};

/// Runs the oracle at one point; PoleError if the point is singular.
inline OracleReport run_oracle(const std::shared_ptr<const Basis>& basis, const mpq_class& q0, const mpq_class& r0,
                               Character which) {
  PointField field(q0, r0);
  OracleReport rep;
  rep.n = basis->n();
  rep.q0 = field.q0();
  rep.r0 = field.r0();
  rep.which = which;
  const Element<mpq_class> target = specialized_symmetrizer(*basis, field, which);
  PointEngine eng(basis, field);
  const auto mats = build_action(eng);
  const mpq_class eigen = which == Character::rho1 ? field.q0() : mpq_class(-1 / field.q0());
  IdealSolution sol = solve_ideal(mats, eigen);
  rep.dim = sol.dim;
  rep.primes_used = sol.primes_used;
  if (sol.dim != 1) return rep;
  // target = scale * solution
  std::size_t k = 0;
  while (k < sol.vector.size() && sgn(sol.vector[k]) == 0) ++k;
  rep.scale = target.coeff(static_cast<int>(k)) / sol.vector[k];
  rep.match = true;
  for (std::size_t j = 0; j < sol.vector.size() && rep.match; ++j)
    rep.match = target.coeff(static_cast<int>(j)) == rep.scale * sol.vector[j];
  return rep;
}

/// Draws points from the sampler until one avoids every pole, then runs
/// the oracle there; points where the space is not one-dimensional are
/// treated as non-generic and skipped.
inline OracleReport run_oracle_random(const std::shared_ptr<const Basis>& basis, PointSampler& sampler, Character which,
                                      int max_tries = 50) {
  for (int t = 0; t < max_tries; ++t) {
    auto [q0, r0] = sampler.next();
    try {
      OracleReport rep = run_oracle(basis, q0, r0, which);
      if (rep.dim == 1) return rep;
    } catch (const PoleError&) {
    }
  }
  throw std::runtime_error("no generic point found");
}

}  // namespace bmwkit
