// Description-logic concept expressions (ALCQ plus nominals).
//
// A Concept is an immutable, reference-counted expression tree. Copies are
// cheap and share structure, so concepts can be passed by value and shared
// freely between threads.

#ifndef ORDO_CONCEPT_HPP
#define ORDO_CONCEPT_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ordo {

enum class ConceptKind : std::uint8_t {
  Top,
  Bottom,
  Atomic,
  Nominal,
  Not,
  And,
  Or,
  Exists,
  ForAll,
  AtLeast,
  AtMost,
};

class Concept {
 public:
  /// Default-constructed concept is Top.
  Concept();

  static Concept top();
  static Concept bottom();
  static Concept atomic(std::string name);
  static Concept nominal(std::string individual);
  static Concept negation(Concept operand);
  /// Operands are kept exactly as given (no flattening); at least two are
  /// required. Use conjoin()/disjoin() for normalizing construction.
  static Concept conjunction(std::vector<Concept> operands);
  static Concept disjunction(std::vector<Concept> operands);
  static Concept exists(std::string role, Concept filler);
  static Concept forall(std::string role, Concept filler);
  static Concept at_least(std::uint32_t n, std::string role, Concept filler);
  static Concept at_most(std::uint32_t n, std::string role, Concept filler);

  ConceptKind kind() const noexcept;
  /// Concept name for Atomic, individual for Nominal, role for restrictions.
  const std::string& name() const noexcept;
  const std::string& role() const noexcept { return name(); }
  std::uint32_t cardinality() const noexcept;
  /// And/Or operands.
  std::span<const Concept> operands() const noexcept;
  /// Not operand or restriction filler.
  const Concept& operand() const noexcept;
  const Concept& filler() const noexcept { return operand(); }

  std::size_t hash() const noexcept;

  bool is_atomic_like() const noexcept {
    return kind() == ConceptKind::Atomic || kind() == ConceptKind::Nominal;
  }
  /// Negation only in front of atomic concepts or nominals.
  bool is_nnf() const;
  /// Or whose operands are all nominals, i.e. an ObjectOneOf enumeration.
  bool is_enumeration() const;

  friend bool operator==(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node);
  static Concept make(ConceptKind kind, std::string name, std::uint32_t n,
                      std::vector<Concept> children);

  std::shared_ptr<const Node> node_;
};

struct ConceptHash {
  std::size_t operator()(const Concept& c) const noexcept { return c.hash(); }
};

/// Negation without normalization; removes a double negation.
Concept negate(const Concept& c);

/// Negation normal form. n-ary And/Or are flattened, >=0 R.C becomes Top.
Concept nnf(const Concept& c);

/// Flattening constructors: nested operands of the same kind are spliced in;
/// zero operands give Top (resp. Bottom), one operand is returned as is.
Concept conjoin(std::vector<Concept> operands);
Concept disjoin(std::vector<Concept> operands);

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  bool operator==(const Signature&) const = default;
};

Signature signature_of(const Concept& c);
void collect_signature(const Concept& c, Signature& out);

/// Number of constructors and leaves in the expression.
std::size_t concept_size(const Concept& c);
/// Nesting depth of quantifiers and number restrictions.
std::size_t modal_depth(const Concept& c);

/// Human-readable DL notation, e.g. "(A ⊓ ∃R.B)".
std::string to_string(const Concept& c);

}  // namespace ordo

#endif  // ORDO_CONCEPT_HPP
