#include "chromaprob/symfunc.hpp"

#include <algorithm>
#include <string>

namespace chromaprob {

SymmetricPolynomial sym_zero(int q) {
    if (q < 1) throw std::invalid_argument("symmetric polynomial needs q >= 1 variables");
    SymmetricPolynomial f;
    f.q = q;
    return f;
}

void sym_add_term(SymmetricPolynomial& f, const Partition& lambda, const Rational& coeff) {
    if (!is_valid_partition(lambda)) throw std::invalid_argument("exponent list is not a partition");
    if ((int)lambda.size() > f.q)
        throw std::invalid_argument("monomial has more parts than variables");
    if (coeff == 0) return;
    auto it = f.terms.find(lambda);
    if (it == f.terms.end()) {
        f.terms.emplace(lambda, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) f.terms.erase(it);
    }
}

SymmetricPolynomial sym_add(const SymmetricPolynomial& a, const SymmetricPolynomial& b) {
    if (a.q != b.q) throw std::invalid_argument("variable counts differ");
    SymmetricPolynomial out = a;
    for (const auto& [lambda, coeff] : b.terms) sym_add_term(out, lambda, coeff);
    return out;
}

SymmetricPolynomial sym_scale(const SymmetricPolynomial& a, const Rational& s) {
    SymmetricPolynomial out = sym_zero(a.q);
    if (s == 0) return out;
    for (const auto& [lambda, coeff] : a.terms) out.terms.emplace(lambda, coeff * s);
    return out;
}

namespace {

std::vector<int> padded_ascending(const Partition& lambda, int q) {
    std::vector<int> v(q, 0);
    std::copy(lambda.begin(), lambda.end(), v.begin());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

SymmetricPolynomial sym_mul(const SymmetricPolynomial& a, const SymmetricPolynomial& b) {
    if (a.q != b.q) throw std::invalid_argument("variable counts differ");
    const int q = a.q;
    std::map<Partition, Rational, PartitionOrder> acc;
    for (const auto& [la, ca] : a.terms) {
        std::vector<int> u = padded_ascending(la, q);
        do {
            for (const auto& [lb, cb] : b.terms) {
                std::vector<int> v = padded_ascending(lb, q);
                do {
                    std::vector<int> w(q);
                    for (int i = 0; i < q; ++i) w[i] = u[i] + v[i];
                    acc[sorted_partition(w)] += ca * cb;
                } while (std::next_permutation(v.begin(), v.end()));
            }
        } while (std::next_permutation(u.begin(), u.end()));
    }
    SymmetricPolynomial out = sym_zero(q);
    // each product monomial was collected once per exponent vector, so the
    // monomial-basis coefficient is the bucket divided by the orbit size
    for (const auto& [nu, total] : acc)
        sym_add_term(out, nu, total / Rational(arrangement_count(nu, q)));
    return out;
}

SymmetricPolynomial monomial_basis_element(const Partition& lambda, int q) {
    if (!is_valid_partition(lambda)) throw std::invalid_argument("exponent list is not a partition");
    SymmetricPolynomial f = sym_zero(q);
    if ((int)lambda.size() <= q) sym_add_term(f, lambda, 1);
    return f;
}

SymmetricPolynomial elementary_power(int k, int q) {
    if (k < 0) throw std::invalid_argument("elementary index must be nonnegative");
    return monomial_basis_element(Partition(k, 1), q);
}

SymmetricPolynomial elementary_product(const Partition& lambda, int q) {
    if (!is_valid_partition(lambda)) throw std::invalid_argument("index list is not a partition");
    SymmetricPolynomial out = monomial_basis_element({}, q);
    for (int part : lambda) out = sym_mul(out, elementary_power(part, q));
    return out;
}

SymmetricPolynomial chromatic_symmetric_function(const Graph& g, int q, long long max_states) {
    ProfileTable table = build_profile_table(g, q, max_states);
    SymmetricPolynomial f = sym_zero(q);
    for (const auto& [lambda, count] : table.counts)
        sym_add_term(f, lambda, Rational(count, arrangement_count(lambda, q)));
    return f;
}

Rational evaluate_symmetric(const SymmetricPolynomial& f, const Distribution& p) {
    if (p.size() != f.q) throw std::invalid_argument("point size does not match variable count");
    Rational total = 0;
    for (const auto& [lambda, coeff] : f.terms) total += coeff * monomial_symmetric(lambda, p);
    return total;
}

int max_degree(const SymmetricPolynomial& f) {
    int degree = 0;
    for (const auto& [lambda, coeff] : f.terms)
        degree = std::max(degree, partition_weight(lambda));
    return degree;
}

std::map<Partition, Rational, PartitionOrder> elementary_basis(const SymmetricPolynomial& f) {
    std::map<int, std::map<Partition, Rational, PartitionOrder>> by_degree;
    for (const auto& [lambda, coeff] : f.terms) by_degree[partition_weight(lambda)][lambda] = coeff;
    std::map<Partition, Rational, PartitionOrder> out;
    for (const auto& [d, rhs_terms] : by_degree) {
        if (d > f.q)
            throw std::invalid_argument(
                "the elementary basis of a degree-" + std::to_string(max_degree(f)) +
                " polynomial needs at least " + std::to_string(max_degree(f)) +
                " variables, but only " + std::to_string(f.q) + " are available");
        std::vector<Partition> lambdas = partitions_of(d, d, d);
        const int size = (int)lambdas.size();
        std::map<Partition, int, PartitionOrder> row_of;
        for (int i = 0; i < size; ++i) row_of[lambdas[i]] = i;
        std::vector<std::vector<Rational>> matrix(size, std::vector<Rational>(size + 1, Rational(0)));
        for (int j = 0; j < size; ++j)
            for (const auto& [mu, c] : elementary_product(lambdas[j], f.q).terms)
                matrix[row_of.at(mu)][j] = c;
        for (const auto& [mu, c] : rhs_terms) matrix[row_of.at(mu)][size] = c;
        for (int col = 0; col < size; ++col) {
            int pivot = col;
            while (pivot < size && matrix[pivot][col] == 0) ++pivot;
            if (pivot == size) throw std::logic_error("elementary expansions are not independent");
            std::swap(matrix[col], matrix[pivot]);
            for (int r = 0; r < size; ++r) {
                if (r == col || matrix[r][col] == 0) continue;
                Rational factor = matrix[r][col] / matrix[col][col];
                for (int k = col; k <= size; ++k) matrix[r][k] -= factor * matrix[col][k];
            }
        }
        for (int j = 0; j < size; ++j) {
            Rational value = matrix[j][size] / matrix[j][j];
            if (value != 0) out[lambdas[j]] = value;
        }
    }
    return out;
}

bool is_e_positive(const SymmetricPolynomial& f) {
    for (const auto& [lambda, coeff] : elementary_basis(f))
        if (coeff < 0) return false;
    return true;
}

SymmetricPolynomial schur_function(const Partition& lambda, int q) {
    if (!is_valid_partition(lambda)) throw std::invalid_argument("shape is not a partition");
    if ((int)lambda.size() > q)
        throw std::invalid_argument("shape has more rows than available entries allow");
    if (partition_weight(lambda) > 8)
        throw resource_limit_error("schur function: tableau shape too large");
    SymmetricPolynomial f = sym_zero(q);
    if (lambda.empty()) {
        sym_add_term(f, {}, 1);
        return f;
    }
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < (int)lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> entry(lambda.size());
    for (std::size_t r = 0; r < lambda.size(); ++r) entry[r].assign(lambda[r], 0);
    std::vector<int> content(q + 1, 0);
    std::map<Partition, Int, PartitionOrder> buckets;
    auto rec = [&](auto&& self, std::size_t at) -> void {
        if (at == cells.size()) {
            std::vector<int> counts(content.begin() + 1, content.end());
            buckets[sorted_partition(counts)] += 1;
            return;
        }
        auto [r, c] = cells[at];
        int lo = 1;
        if (c > 0) lo = std::max(lo, entry[r][c - 1]);
        if (r > 0) lo = std::max(lo, entry[r - 1][c] + 1);
        for (int value = lo; value <= q; ++value) {
            entry[r][c] = value;
            content[value]++;
            self(self, at + 1);
            content[value]--;
        }
    };
    rec(rec, 0);
    for (const auto& [mu, count] : buckets)
        sym_add_term(f, mu, Rational(count, arrangement_count(mu, q)));
    return f;
}

}  // namespace chromaprob
