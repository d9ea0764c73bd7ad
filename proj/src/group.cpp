#include "coarsekit/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coarsekit {

namespace {

std::int64_t wrap_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

void reduce_free_word(Elem& w) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (out > 0 && w[out - 1] == -w[i]) {
            --out;
        } else {
            w[out++] = w[i];
        }
    }
    w.resize(out);
}

}  // namespace

GroupFamily GroupFamily::free_abelian(int rank) {
    if (rank < 1) throw InvalidInputError("free_abelian: rank must be >= 1");
    GroupFamily f(FamilyKind::FreeAbelian);
    f.rank_ = rank;
    return f;
}

GroupFamily GroupFamily::free_group(int rank) {
    if (rank < 1 || rank > 26) throw InvalidInputError("free_group: rank must be in [1, 26]");
    GroupFamily f(FamilyKind::Free);
    f.rank_ = rank;
    return f;
}

GroupFamily GroupFamily::heisenberg_z() {
    GroupFamily f(FamilyKind::HeisenbergZ);
    f.rank_ = 3;
    return f;
}

GroupFamily GroupFamily::cyclic(std::int64_t modulus) {
    if (modulus < 1) throw InvalidInputError("cyclic: modulus must be >= 1");
    GroupFamily f(FamilyKind::Cyclic);
    f.modulus_ = modulus;
    return f;
}

GroupFamily GroupFamily::cyclic_quotient_of_line(std::int64_t modulus) {
    if (modulus < 1) throw InvalidInputError("cyclic_quotient_of_line: modulus must be >= 1");
    GroupFamily f(FamilyKind::CyclicQuotientOfLine);
    f.modulus_ = modulus;
    return f;
}

GroupFamily GroupFamily::finite_table(std::vector<std::int64_t> table, std::int64_t order) {
    if (order < 1 || static_cast<std::int64_t>(table.size()) != order * order)
        throw InvalidInputError("finite_table: table must be order*order entries");
    for (auto v : table)
        if (v < 0 || v >= order) throw InvalidInputError("finite_table: entry out of range");
    auto at = [&](std::int64_t a, std::int64_t b) { return table[a * order + b]; };
    std::int64_t id = -1;
    for (std::int64_t e = 0; e < order; ++e) {
        bool ok = true;
        for (std::int64_t a = 0; a < order && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw InvalidInputError("finite_table: no identity element");
    for (std::int64_t a = 0; a < order; ++a) {
        bool has_inv = false;
        for (std::int64_t b = 0; b < order; ++b)
            if (at(a, b) == id && at(b, a) == id) has_inv = true;
        if (!has_inv) throw InvalidInputError("finite_table: element without inverse");
    }
    for (std::int64_t a = 0; a < order; ++a)
        for (std::int64_t b = 0; b < order; ++b)
            for (std::int64_t c = 0; c < order; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw InvalidInputError("finite_table: not associative");
    GroupFamily f(FamilyKind::FiniteTable);
    f.modulus_ = order;
    f.table_ = std::make_shared<const std::vector<std::int64_t>>(std::move(table));
    f.table_identity_ = id;
    return f;
}

GroupFamily GroupFamily::direct_product(GroupFamily a, GroupFamily b) {
    GroupFamily f(FamilyKind::DirectProduct);
    f.left_ = std::make_shared<const GroupFamily>(std::move(a));
    f.right_ = std::make_shared<const GroupFamily>(std::move(b));
    return f;
}

Elem GroupFamily::identity() const {
    switch (kind_) {
        case FamilyKind::FreeAbelian: return Elem(rank_, 0);
        case FamilyKind::Free: return {};
        case FamilyKind::HeisenbergZ: return {0, 0, 0};
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine: return {0};
        case FamilyKind::FiniteTable: return {table_identity_};
        case FamilyKind::DirectProduct: {
            Elem l = left_->identity(), r = right_->identity();
            Elem out{static_cast<std::int64_t>(l.size())};
            out.insert(out.end(), l.begin(), l.end());
            out.insert(out.end(), r.begin(), r.end());
            return out;
        }
    }
    return {};
}

namespace {
std::pair<Elem, Elem> split_product(const Elem& a) {
    if (a.empty()) throw InvalidInputError("direct product element: empty encoding");
    auto n = static_cast<std::size_t>(a[0]);
    if (1 + n > a.size()) throw InvalidInputError("direct product element: bad split length");
    return {Elem(a.begin() + 1, a.begin() + 1 + n), Elem(a.begin() + 1 + n, a.end())};
}

Elem join_product(const Elem& l, const Elem& r) {
    Elem out{static_cast<std::int64_t>(l.size())};
    out.insert(out.end(), l.begin(), l.end());
    out.insert(out.end(), r.begin(), r.end());
    return out;
}
}  // namespace

Elem GroupFamily::mul(const Elem& a, const Elem& b) const {
    switch (kind_) {
        case FamilyKind::FreeAbelian: {
            Elem out(rank_);
            for (int i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
            return out;
        }
        case FamilyKind::Free: {
            Elem out = a;
            out.insert(out.end(), b.begin(), b.end());
            reduce_free_word(out);
            return out;
        }
        case FamilyKind::HeisenbergZ:
            return {a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1] - b[0] * a[1]};
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine:
            return {wrap_mod(a[0] + b[0], modulus_)};
        case FamilyKind::FiniteTable:
            return {(*table_)[a[0] * modulus_ + b[0]]};
        case FamilyKind::DirectProduct: {
            auto [al, ar] = split_product(a);
            auto [bl, br] = split_product(b);
            return join_product(left_->mul(al, bl), right_->mul(ar, br));
        }
    }
    return {};
}

Elem GroupFamily::inv(const Elem& a) const {
    switch (kind_) {
        case FamilyKind::FreeAbelian: {
            Elem out(rank_);
            for (int i = 0; i < rank_; ++i) out[i] = -a[i];
            return out;
        }
        case FamilyKind::Free: {
            Elem out(a.rbegin(), a.rend());
            for (auto& v : out) v = -v;
            return out;
        }
        case FamilyKind::HeisenbergZ:
            // (x,y,z)(-x,-y,-z) = (0, 0, z - z + x(-y) - (-x)y) = (0,0,0)
            return {-a[0], -a[1], -a[2]};
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine:
            return {wrap_mod(-a[0], modulus_)};
        case FamilyKind::FiniteTable: {
            for (std::int64_t b = 0; b < modulus_; ++b)
                if ((*table_)[a[0] * modulus_ + b] == table_identity_) return {b};
            throw InvalidInputError("finite_table: inverse lookup failed");
        }
        case FamilyKind::DirectProduct: {
            auto [al, ar] = split_product(a);
            return join_product(left_->inv(al), right_->inv(ar));
        }
    }
    return {};
}

bool GroupFamily::is_identity(const Elem& a) const { return a == identity(); }

Elem GroupFamily::normalize(const Elem& a) const {
    switch (kind_) {
        case FamilyKind::FreeAbelian:
        case FamilyKind::HeisenbergZ:
        case FamilyKind::FiniteTable:
            return a;
        case FamilyKind::Free: {
            Elem out = a;
            reduce_free_word(out);
            return out;
        }
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine:
            return {wrap_mod(a[0], modulus_)};
        case FamilyKind::DirectProduct: {
            auto [l, r] = split_product(a);
            return join_product(left_->normalize(l), right_->normalize(r));
        }
    }
    return a;
}

bool GroupFamily::abelian() const {
    switch (kind_) {
        case FamilyKind::FreeAbelian:
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine:
            return true;
        case FamilyKind::Free:
            return rank_ <= 1;
        case FamilyKind::HeisenbergZ:
            return false;
        case FamilyKind::FiniteTable: {
            for (std::int64_t a = 0; a < modulus_; ++a)
                for (std::int64_t b = 0; b < a; ++b)
                    if ((*table_)[a * modulus_ + b] != (*table_)[b * modulus_ + a]) return false;
            return true;
        }
        case FamilyKind::DirectProduct:
            return left_->abelian() && right_->abelian();
    }
    return false;
}

std::string GroupFamily::str(const Elem& a) const {
    std::ostringstream os;
    switch (kind_) {
        case FamilyKind::FreeAbelian:
        case FamilyKind::HeisenbergZ: {
            if (rank_ == 1 && kind_ == FamilyKind::FreeAbelian) {
                os << a[0];
            } else {
                os << '(';
                for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
                os << ')';
            }
            break;
        }
        case FamilyKind::Free: {
            if (a.empty()) { os << '1'; break; }
            for (auto v : a) {
                char c = static_cast<char>('a' + (v > 0 ? v : -v) - 1);
                os << (v > 0 ? c : static_cast<char>(c - 'a' + 'A'));
            }
            break;
        }
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine:
        case FamilyKind::FiniteTable:
            os << a[0];
            break;
        case FamilyKind::DirectProduct: {
            auto [l, r] = split_product(a);
            os << '(' << left_->str(l) << ';' << right_->str(r) << ')';
            break;
        }
    }
    return os.str();
}

void GroupFamily::check(const Elem& a) const {
    switch (kind_) {
        case FamilyKind::FreeAbelian:
            if (static_cast<int>(a.size()) != rank_)
                throw InvalidInputError("element arity mismatch for free abelian group");
            return;
        case FamilyKind::HeisenbergZ:
            if (a.size() != 3) throw InvalidInputError("Heisenberg element must be a triple");
            return;
        case FamilyKind::Free: {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0 || a[i] > rank_ || a[i] < -rank_)
                    throw InvalidInputError("free word letter out of range");
                if (i > 0 && a[i] == -a[i - 1])
                    throw InvalidInputError("free word not reduced");
            }
            return;
        }
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine:
        case FamilyKind::FiniteTable:
            if (a.size() != 1 || a[0] < 0 || a[0] >= modulus_)
                throw InvalidInputError("residue/index out of range");
            return;
        case FamilyKind::DirectProduct: {
            auto [l, r] = split_product(a);
            left_->check(l);
            right_->check(r);
            return;
        }
    }
}

std::string GroupFamily::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case FamilyKind::FreeAbelian: os << "free_abelian(" << rank_ << ")"; break;
        case FamilyKind::Free: os << "free(" << rank_ << ")"; break;
        case FamilyKind::HeisenbergZ: os << "heisenberg_z"; break;
        case FamilyKind::Cyclic: os << "cyclic(" << modulus_ << ")"; break;
        case FamilyKind::CyclicQuotientOfLine: os << "cyclic_quotient_of_line(" << modulus_ << ")"; break;
        case FamilyKind::FiniteTable: os << "finite_table(" << modulus_ << ")"; break;
        case FamilyKind::DirectProduct:
            os << "product(" << left_->describe() << "," << right_->describe() << ")";
            break;
    }
    return os.str();
}

GeneratingSet make_genset(const GroupFamily& fam, std::vector<Elem> elems, bool symmetrize) {
    std::set<Elem> pool;
    for (auto& e : elems) {
        Elem n = fam.normalize(e);
        fam.check(n);
        if (fam.is_identity(n)) continue;
        pool.insert(n);
        if (symmetrize) pool.insert(fam.inv(n));
    }
    GeneratingSet s;
    s.elems.assign(pool.begin(), pool.end());
    s.symmetrized = true;
    if (!symmetrize) {
        // Keep the caller's set as-is, but report whether it happens to be symmetric.
        std::set<Elem> given;
        for (auto& e : elems) {
            Elem n = fam.normalize(e);
            if (!fam.is_identity(n)) given.insert(n);
        }
        s.elems.assign(given.begin(), given.end());
        s.symmetrized = true;
        for (auto& e : s.elems)
            if (!given.count(fam.inv(e))) s.symmetrized = false;
    }
    return s;
}

GeneratingSet standard_gens(const GroupFamily& fam) {
    std::vector<Elem> gens;
    switch (fam.kind()) {
        case FamilyKind::FreeAbelian:
            for (int i = 0; i < fam.rank(); ++i) {
                Elem e(fam.rank(), 0);
                e[i] = 1;
                gens.push_back(e);
            }
            break;
        case FamilyKind::Free:
            for (int i = 1; i <= fam.rank(); ++i) gens.push_back({i});
            break;
        case FamilyKind::Cyclic:
        case FamilyKind::CyclicQuotientOfLine:
            gens.push_back({1 % fam.modulus()});
            break;
        case FamilyKind::HeisenbergZ:
            return heisenberg_xy_gens();
        default:
            throw InvalidInputError("standard_gens: no canonical generators for this family");
    }
    return make_genset(fam, gens, true);
}

GeneratingSet heisenberg_xy_gens() {
    return make_genset(GroupFamily::heisenberg_z(), {{1, 0, 0}, {0, 1, 0}}, true);
}

Elem eval_word(const GroupFamily& fam, const std::vector<Elem>& gens, const std::vector<int>& word) {
    Elem acc = fam.identity();
    for (int letter : word) {
        if (letter == 0) throw InvalidInputError("word letter 0 is not valid");
        int idx = (letter > 0 ? letter : -letter) - 1;
        if (idx >= static_cast<int>(gens.size())) throw InvalidInputError("word letter out of range");
        acc = fam.mul(acc, letter > 0 ? gens[idx] : fam.inv(gens[idx]));
    }
    return acc;
}

}  // namespace coarsekit
