#pragma once

#include "coarsekit/errors.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coarsekit {

/// A group element in family-interpreted normal form. Flat integer encoding:
///   FreeAbelian(d)        d coordinates
///   Free(k)               reduced word, letters +i / -i for generator i (1-based)
///   HeisenbergZ           triple (x, y, z)
///   Cyclic / CyclicQuotientOfLine   one residue in [0, m)
///   FiniteTable           one element index
///   DirectProduct(A, B)   [len(A-part), A-part..., B-part...]
/// Canonical ordering of elements is lexicographic on this vector.
using Elem = std::vector<std::int64_t>;

enum class FamilyKind {
    FreeAbelian,
    Free,
    HeisenbergZ,
    Cyclic,
    CyclicQuotientOfLine,
    FiniteTable,
    DirectProduct,
};

/// A group family with an exact multiplication and a normal-form oracle.
/// Immutable; cheap to copy (shared internals).
class GroupFamily {
  public:
    static GroupFamily free_abelian(int rank);
    static GroupFamily free_group(int rank);
    static GroupFamily heisenberg_z();
    static GroupFamily cyclic(std::int64_t modulus);
    /// Integer line reduced mod m; same arithmetic as cyclic(m), tagged as a
    /// quotient so covering constructions know its provenance.
    static GroupFamily cyclic_quotient_of_line(std::int64_t modulus);
    /// Multiplication table, row-major m*m of element indices. Validates
    /// associativity, identity and inverses.
    static GroupFamily finite_table(std::vector<std::int64_t> table, std::int64_t order);
    static GroupFamily direct_product(GroupFamily a, GroupFamily b);

    FamilyKind kind() const { return kind_; }
    int rank() const { return rank_; }
    std::int64_t modulus() const { return modulus_; }
    const GroupFamily& left() const { return *left_; }
    const GroupFamily& right() const { return *right_; }

    Elem identity() const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    bool is_identity(const Elem& a) const;
    /// Canonicalizes an arbitrary encoding of the same shape (reduces free
    /// words, wraps residues). Elements produced by mul/inv are already normal.
    Elem normalize(const Elem& a) const;
    /// True when the whole family is commutative, in which case exact word
    /// lengths of quotient differences are computable by a group-level table.
    bool abelian() const;
    /// Display / serialization form of a normal element.
    std::string str(const Elem& a) const;
    /// Throws InvalidInputError if `a` is not a well-formed normal form.
    void check(const Elem& a) const;

    std::string describe() const;

  private:
    FamilyKind kind_;
    int rank_ = 0;
    std::int64_t modulus_ = 0;
    std::shared_ptr<const std::vector<std::int64_t>> table_;
    std::shared_ptr<const GroupFamily> left_, right_;
    std::int64_t table_identity_ = 0;

    explicit GroupFamily(FamilyKind k) : kind_(k) {}
};

/// A finite symmetric-or-not generating set; identity excluded, deduplicated,
/// kept in canonical (lexicographic) order.
struct GeneratingSet {
    std::vector<Elem> elems;
    bool symmetrized = false;
};

/// Builds a generating set; closes under inversion when `symmetrize` is set.
GeneratingSet make_genset(const GroupFamily& fam, std::vector<Elem> elems, bool symmetrize = true);

/// +-e_i for FreeAbelian, +-letters for Free, +-1 for Cyclic variants.
GeneratingSet standard_gens(const GroupFamily& fam);

/// {x^+-, y^+-} for HeisenbergZ.
GeneratingSet heisenberg_xy_gens();

/// Word evaluation: letters are +-(i+1) referring to gens[i].
Elem eval_word(const GroupFamily& fam, const std::vector<Elem>& gens, const std::vector<int>& word);

}  // namespace coarsekit
