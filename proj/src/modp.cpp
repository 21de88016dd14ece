#include "gradeforge/modp.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "gradeforge/error.hpp"
#include "gradeforge/number_theory.hpp"

namespace gradeforge {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// p-adic valuation of a nonzero rational.
long rational_valuation(const Rational& c, u64 p) {
  return static_cast<long>(valuation(c.get_num(), p)) - static_cast<long>(valuation(c.get_den(), p));
}

using Series = std::vector<u64>;

Series truncated(const Series& a, std::size_t n) {
  return Series(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(n, a.size())));
}

Series add(const Series& a, const Series& b, u64 m) {
  Series out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % m;
  return out;
}

// Product modulo z^n and m by Kronecker substitution: both series are packed
// into one big integer each, with slots wide enough that no slot overflows,
// and GMP does the multiplication.
Series mul_trunc(const Series& a0, const Series& b0, std::size_t n, u64 m) {
  const Series a = truncated(a0, n);
  const Series b = truncated(b0, n);
  if (a.empty() || b.empty()) return {};
  const u128 bound = static_cast<u128>(std::min(a.size(), b.size())) * (m - 1) * (m - 1);
  unsigned bits = 1;
  while (bits < 127 && (static_cast<u128>(1) << bits) <= bound) ++bits;

  auto pack = [bits](const Series& s) {
    std::vector<u64> words((s.size() * bits + 63) / 64 + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::size_t off = i * bits;
      words[off / 64] |= s[i] << (off % 64);
      if (off % 64 != 0) words[off / 64 + 1] |= s[i] >> (64 - off % 64);
    }
    mpz_class z;
    mpz_import(z.get_mpz_t(), words.size(), -1, sizeof(u64), 0, 0, words.data());
    return z;
  };
  mpz_class prod = pack(a) * pack(b);

  const std::size_t len = std::min(n, a.size() + b.size() - 1);
  const std::size_t prod_words = (mpz_sizeinbase(prod.get_mpz_t(), 2) + 63) / 64;
  std::vector<u64> words(std::max((len * bits + 63) / 64, prod_words) + 3, 0);
  std::size_t written = 0;
  mpz_export(words.data(), &written, -1, sizeof(u64), 0, 0, prod.get_mpz_t());
  Series out(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t off = i * bits;
    const std::size_t w = off / 64;
    const unsigned sh = off % 64;
    u128 v = (static_cast<u128>(words[w + 1]) << 64 | words[w]) >> sh;
    if (sh + bits > 128) v |= static_cast<u128>(words[w + 2]) << (128 - sh);
    if (bits < 128) v &= (static_cast<u128>(1) << bits) - 1;
    out[i] = static_cast<u64>(v % m);
  }
  return out;
}

// 1/a modulo z^n and m; a_0 must be a unit.
Series inverse(const Series& a, std::size_t n, u64 m) {
  Series h{inverse_mod(Integer(static_cast<unsigned long>(a.at(0))), m)};
  for (std::size_t prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    Series e = mul_trunc(a, h, prec, m);
    for (auto& c : e) c = (m - c) % m;
    e.resize(prec, 0);
    e[0] = (e[0] + 2) % m;
    h = mul_trunc(h, e, prec, m);
  }
  h.resize(n, 0);
  return h;
}

u64 fnv1a(const std::vector<u64>& v) {
  u64 h = 1469598103934665603ull;
  for (u64 x : v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

std::string to_string(KernelStatus s) {
  switch (s) {
    case KernelStatus::closed: return "closed";
    case KernelStatus::exhausted_budget: return "exhausted-budget";
    case KernelStatus::truncation_limited: return "truncation-limited";
  }
  return "exhausted-budget";
}

u64 prime_power(u64 p, unsigned r) {
  if (!is_prime(p)) throw Error(ErrorCode::UnsupportedModulus, std::to_string(p) + " is not prime");
  if (r == 0) throw Error(ErrorCode::UnsupportedModulus, "exponent must be at least 1");
  u64 m = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (m > kMaxModulus / p) throw Error(ErrorCode::UnsupportedModulus, "modulus too large");
    m *= p;
  }
  if (m >= kMaxModulus) throw Error(ErrorCode::UnsupportedModulus, "modulus too large");
  return m;
}

ResidueSequence reduce_mod(const TruncSeries& f, u64 p, unsigned r) {
  ResidueSequence out;
  out.prime = p;
  out.exponent = r;
  out.modulus = prime_power(p, r);
  out.source_truncation = f.order();
  out.terms.reserve(f.order());
  for (std::size_t n = 0; n < f.order(); ++n) {
    if (mpz_divisible_ui_p(f[n].get_den().get_mpz_t(), p) != 0) {
      throw Error(ErrorCode::PrimeDividesDenominator,
                  std::to_string(p) + " divides the denominator at index " + std::to_string(n));
    }
    out.terms.push_back(reduce_rational_mod(f[n], out.modulus));
  }
  return out;
}

ResidueSequence expand_branch_mod(const Annihilator& a, u64 p, unsigned r, std::size_t count) {
  constexpr std::size_t kZ = Annihilator::kZ;
  constexpr std::size_t kY = Annihilator::kY;
  ResidueSequence out;
  out.prime = p;
  out.exponent = r;
  out.modulus = prime_power(p, r);
  out.source_truncation = count;
  const u64 m = out.modulus;
  if (count == 0) return out;
  if (mpz_divisible_ui_p(a.y0().get_den().get_mpz_t(), p) != 0) {
    throw Error(ErrorCode::PrimeDividesDenominator, std::to_string(p) + " divides the denominator at index 0");
  }

  // Q(z, w) = P(z, y0 + p^s·w) / p^c with a unit linear coefficient.
  Poly q = a.poly().shift_variable(kY, a.y0());
  unsigned s = 0;
  for (;; ++s) {
    long minval = std::numeric_limits<long>::max();
    for (const auto& [mono, c] : q.terms()) minval = std::min(minval, rational_valuation(c, p));
    Rational scale = pow(Rational(static_cast<unsigned long>(p)), -minval);
    q *= scale;
    const Rational lin = q.coefficient(Monomial{0, 1});
    if (lin == 0) throw Error(ErrorCode::RamifiedBranch, "branch has a vanishing linear term");
    if (rational_valuation(lin, p) == 0) break;
    if (s == 8) {
      // Usually the branch itself is not p-integral, which the exact prefix shows.
      reduce_mod(expand_branch(a, std::min(count, kExactCrossCheck)), p, r);
      throw Error(ErrorCode::UnsupportedModulus, "could not make the linear term a p-adic unit");
    }
    Poly rescaled(2);
    for (const auto& [mono, c] : q.terms()) {
      rescaled.add_term(mono, c * pow(Rational(static_cast<unsigned long>(p)), static_cast<long>(mono[kY])));
    }
    q = std::move(rescaled);
  }

  const unsigned dy = q.degree(kY);
  const unsigned dz = q.degree(kZ);
  std::vector<Series> qc(dy + 1, Series(dz + 1, 0));
  for (const auto& [mono, c] : q.terms()) qc[mono[kY]][mono[kZ]] = reduce_rational_mod(c, m);

  // Newton iteration w <- w - Q(z, w)/Q_w(z, w), doubling the precision.
  Series w{0};
  for (std::size_t prec = 1; prec < count;) {
    prec = std::min(2 * prec, count);
    Series val = truncated(qc[dy], prec);
    Series der;
    for (unsigned j = dy; j-- > 0;) {
      der = add(mul_trunc(der, w, prec, m), val, m);
      val = add(mul_trunc(val, w, prec, m), truncated(qc[j], prec), m);
    }
    const Series step = mul_trunc(val, inverse(der, prec, m), prec, m);
    w.resize(prec, 0);
    for (std::size_t i = 0; i < step.size(); ++i) w[i] = (w[i] + m - step[i]) % m;
  }

  u64 ps = 1;
  for (unsigned i = 0; i < s; ++i) ps = mulmod(ps, p, m);
  out.terms.resize(count);
  out.terms[0] = reduce_rational_mod(a.y0(), m);
  for (std::size_t n = 1; n < count; ++n) out.terms[n] = n < w.size() ? mulmod(ps, w[n], m) : 0;
  return out;
}

unsigned default_kernel_depth(u64 base) {
  if (base == 2) return 8;
  if (base == 3) return 7;
  return 4;
}

KernelAutomaton kernel_closure(const ResidueSequence& s, u64 q, const KernelBudgets& budgets) {
  if (q < 2) throw Error(ErrorCode::DegenerateInput, "kernel base must be at least 2");
  const std::size_t L = budgets.fingerprint_length;
  const unsigned K = budgets.max_depth;
  if (L == 0) throw Error(ErrorCode::BudgetTooSmall, "fingerprint length must be positive");
  // q^K, saturating.
  std::vector<u64> qpow{1};
  for (unsigned k = 0; k < K; ++k) {
    u64 next = qpow.back() > std::numeric_limits<u64>::max() / q ? std::numeric_limits<u64>::max() : qpow.back() * q;
    qpow.push_back(next);
  }
  if (qpow[K] > s.terms.size() / L) {
    throw Error(ErrorCode::BudgetTooSmall, "fingerprints of length " + std::to_string(L) + " at depth " +
                                               std::to_string(K) + " need " + std::to_string(L) + "·" +
                                               std::to_string(q) + "^" + std::to_string(K) + " terms, have " +
                                               std::to_string(s.terms.size()));
  }

  KernelAutomaton out;
  out.base = q;
  out.fingerprint_length = L;
  std::unordered_map<u64, std::vector<std::size_t>> by_hash;

  auto fingerprint = [&](unsigned k, u64 j) {
    std::vector<u64> fp(L);
    for (std::size_t n = 0; n < L; ++n) fp[n] = s.terms[qpow[k] * n + j];
    return fp;
  };
  auto add_state = [&](unsigned k, u64 j, std::vector<u64> fp) {
    KernelState st;
    st.k = k;
    st.j = j;
    st.fingerprint_hash = fnv1a(fp);
    st.fingerprint = std::move(fp);
    st.transitions.assign(q, KernelAutomaton::kUnresolved);
    by_hash[st.fingerprint_hash].push_back(out.states.size());
    out.states.push_back(std::move(st));
    return out.states.size() - 1;
  };
  auto find_state = [&](const std::vector<u64>& fp, u64 h) -> std::size_t {
    auto it = by_hash.find(h);
    if (it == by_hash.end()) return KernelAutomaton::kUnresolved;
    for (std::size_t id : it->second) {
      if (out.states[id].fingerprint == fp) return id;
    }
    return KernelAutomaton::kUnresolved;
  };

  std::vector<std::size_t> frontier{add_state(0, 0, fingerprint(0, 0))};
  bool exhausted = false;
  while (!frontier.empty() && !exhausted) {
    std::sort(frontier.begin(), frontier.end(),
              [&](std::size_t x, std::size_t y) { return out.states[x].j < out.states[y].j; });
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      const unsigned k = out.states[id].k;
      if (k >= K) {
        exhausted = true;
        break;
      }
      for (u64 d = 0; d < q; ++d) {
        const u64 j = out.states[id].j + d * qpow[k];
        std::vector<u64> fp = fingerprint(k + 1, j);
        std::size_t target = find_state(fp, fnv1a(fp));
        if (target == KernelAutomaton::kUnresolved) {
          if (out.states.size() >= budgets.max_states) {
            exhausted = true;
            break;
          }
          target = add_state(k + 1, j, std::move(fp));
          next.push_back(target);
        }
        out.states[id].transitions[d] = target;
      }
      if (exhausted) break;
    }
    frontier = std::move(next);
  }
  out.status = exhausted ? KernelStatus::exhausted_budget : KernelStatus::closed;
  return out;
}

std::string KernelAutomaton::to_dot() const {
  std::ostringstream os;
  os << "digraph kernel {\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    os << "  s" << i << " [label=\"(" << states[i].k << "," << states[i].j << ")\"];\n";
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t d = 0; d < states[i].transitions.size(); ++d) {
      if (states[i].transitions[d] == kUnresolved) continue;
      os << "  s" << i << " -> s" << states[i].transitions[d] << " [label=\"" << d << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

ChristolReport christol_report(const Annihilator& a, u64 p, unsigned r, u64 q, const KernelBudgets& budgets) {
  std::size_t terms = budgets.fingerprint_length;
  for (unsigned k = 0; k < budgets.max_depth; ++k) {
    if (terms > budgets.max_terms / q) {
      throw Error(ErrorCode::BudgetExceeded, "L·q^K exceeds the expansion budget of " +
                                                 std::to_string(budgets.max_terms) + " terms");
    }
    terms *= q;
  }
  ChristolReport out;
  out.prime = p;
  out.exponent = r;
  out.terms = terms;

  const std::size_t prefix = std::min(terms, kExactCrossCheck);
  const ResidueSequence exact = reduce_mod(expand_branch(a, prefix), p, r);
  const ResidueSequence seq = expand_branch_mod(a, p, r, terms);
  out.exact_prefix_agrees = std::equal(exact.terms.begin(), exact.terms.end(), seq.terms.begin());
  out.automaton = kernel_closure(seq, q, budgets);
  out.consistent_with_christol = out.automaton.status == KernelStatus::closed;
  return out;
}

}  // namespace gradeforge
