#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hgff/hyperfn.hpp"

namespace hgff {

class EvalCtx;

enum class IdentityStatus { theorem, conjecture };
enum class VerifyStatus { pass, fail, observed, refuted, inapplicable };

std::string to_string(IdentityStatus s);
std::string to_string(VerifyStatus s);

enum class SlotKind { character, element, integer };

// One coordinate of the sweep. values() lists the admissible raw values on
// a field: character exponents, element codes or plain integers.
struct Slot {
  std::string name;
  SlotKind kind = SlotKind::character;
  std::function<std::vector<std::int64_t>(const FiniteField&)> values;
};

// One displayed equality evaluated at a tuple.
struct Sides {
  CycloNum lhs;
  CycloNum rhs;
};

struct EvalOptions {
  bool strip_delta = false;
  // index of a stated exclusion to ignore, -1 for none
  int relax = -1;
};

// Returns the displays that apply at the tuple; empty when the tuple lies
// outside the stated domain.
using Evaluator =
    std::function<std::vector<Sides>(EvalCtx&, const std::vector<std::int64_t>&, const EvalOptions&)>;

struct IdentityRecord {
  std::string id;
  IdentityStatus status = IdentityStatus::theorem;
  std::string summary;
  std::string requirement;  // human-readable condition on q
  std::function<bool(const FiniteField&)> applies;
  std::vector<Slot> slots;
  int arg_slot = -1;          // slot holding the argument, -1 if none
  bool has_delta = false;     // whether strip_delta changes anything
  int exclusions = 0;         // number of relaxable exclusions
  std::vector<std::uint64_t> default_q;
  Evaluator eval;
};

struct Witness {
  std::vector<std::int64_t> tuple;
  std::string assignment;  // "A=chi^3, x=g^2"
  std::string arg;         // formatted argument, empty if none
  int display = 0;
  std::string lhs;
  std::string rhs;
  // exact sides, absent when the evaluation raised an error
  std::optional<CycloNum> lhs_value;
  std::optional<CycloNum> rhs_value;
};

struct VerifyMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static VerifyMode sample(std::uint64_t n, std::uint64_t seed) { return {false, n, seed}; }
  // "exhaustive" or "sample:N:SEED"
  static VerifyMode parse(const std::string& s);
  std::string str() const;
};

struct RunOptions {
  EvalOptions eval;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::size_t max_witnesses = 20;
};

struct VerifyReport {
  std::string id;
  std::uint64_t q = 0;
  IdentityStatus kind = IdentityStatus::theorem;
  VerifyStatus status = VerifyStatus::inapplicable;
  std::string mode;
  std::uint64_t tuples_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<Witness> failures;  // first max_witnesses, in tuple order
};

// F_q for a prime power q; NotPrime otherwise
const FiniteField& field_of_order(std::uint64_t q);

const std::vector<IdentityRecord>& identity_registry();
const IdentityRecord& find_identity(const std::string& id);

VerifyReport verify(const std::string& id, const FiniteField& F, const VerifyMode& mode = {},
                    const RunOptions& opts = {});
std::vector<VerifyReport> verify_all(const std::vector<const FiniteField*>& fields, const VerifyMode& mode = {},
                                     const RunOptions& opts = {});

struct DeltaAudit {
  std::string id;
  std::uint64_t q = 0;
  bool has_delta = false;
  std::uint64_t tuples_checked = 0;
  // tuples failing once the delta terms are removed
  std::vector<Witness> failures;
  // tuples where the removed terms are nonzero
  std::uint64_t predicted = 0;
  // failures coincide exactly with the predicted support
  bool exact_support = true;
  // distinct formatted arguments among the failures, sorted
  std::vector<std::string> failing_args;
};

DeltaAudit delta_audit(const std::string& id, const FiniteField& F, unsigned workers = 0);

// Field helpers shared by the evaluators. One instance per worker thread.
class EvalCtx {
 public:
  static constexpr std::uint32_t kInf = 0xffffffffu;

  explicit EvalCtx(const FiniteField& F);

  const FiniteField& F;
  std::int64_t L;    // q - 1
  std::int64_t phi;  // exponent of the quadratic character, 0 for even q
  std::uint64_t q;

  std::int64_t e(std::int64_t m) const;
  bool triv(std::int64_t m) const { return e(m) == 0; }
  std::uint64_t order(std::int64_t m) const;

  // chi_m(x); x must be finite
  CycloNum v(std::int64_t m, std::uint32_t x) const;
  // chi_m(-1)
  int s(std::int64_t m) const;
  CycloNum J(std::int64_t a, std::int64_t b);
  CycloNum g(std::int64_t m);

  CycloNum P2(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::uint32_t x);
  CycloNum F2(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::uint32_t x);
  CycloNum Pn(const std::vector<std::int64_t>& upper, const std::vector<std::int64_t>& lower, std::uint32_t x);
  CycloNum Fn(const std::vector<std::int64_t>& upper, const std::vector<std::int64_t>& lower, std::uint32_t x);

  // element arithmetic on codes; kInf marks a division by zero
  std::uint32_t k(std::int64_t n) const { return F.int_code(n); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pw(std::uint32_t a, unsigned n) const;
  std::vector<std::uint32_t> roots(std::uint32_t a, unsigned n) const;  // n-th roots of a
  int del(std::uint32_t x) const { return x == 0 ? 1 : 0; }
  int quad(std::uint32_t x) const;  // phi(x) as -1, 0, 1

 private:
  GaussJacobiCache* gj_;
};

}  // namespace hgff
