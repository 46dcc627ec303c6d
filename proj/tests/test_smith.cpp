#include "doctest.h"

#include "unitgroups/presentation.hpp"
#include "unitgroups/smith.hpp"

#include <random>

using namespace unitgroups;

namespace {

template <typename T>
void check_snf_contract(const Matrix<T>& m) {
    auto res = smith_normal_form(m);
    CHECK(res.u * res.d * res.v == m);
    CHECK(res.u * res.u_inv == Matrix<T>::identity(m.rows));
    CHECK(res.v * res.v_inv == Matrix<T>::identity(m.cols));
    auto diag = res.diagonal();
    for (size_t j = 0; j + 1 < diag.size(); ++j) {
        if (euclidean_traits<T>::is_zero(diag[j])) {
            CHECK(euclidean_traits<T>::is_zero(diag[j + 1]));
        } else if (!euclidean_traits<T>::is_zero(diag[j + 1])) {
            CHECK(euclidean_traits<T>::is_zero(
                euclidean_traits<T>::divmod(diag[j + 1], diag[j]).second));
        }
    }
    // off-diagonal must vanish
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j) CHECK(euclidean_traits<T>::is_zero(res.d.at(i, j)));
    // canonical associates on the diagonal, and SNF(D) = D
    for (auto& d : diag)
        if (!euclidean_traits<T>::is_zero(d))
            CHECK(euclidean_traits<T>::canonical(d).first == d);
    auto again = smith_normal_form(res.d);
    CHECK(again.d == res.d);
}

} // namespace

TEST_CASE("identity and simple diagonals") {
    auto id = Matrix<i64>::identity(2);
    auto res = smith_normal_form(id);
    CHECK(res.d == id);

    Matrix<i64> m(2, 2);
    m.at(0, 0) = 4;
    m.at(1, 1) = 6;
    auto r2 = smith_normal_form(m);
    CHECK(r2.diagonal() == std::vector<i64>{2, 12});
    check_snf_contract(m);
}

TEST_CASE("zero and rectangular shapes") {
    Matrix<i64> z(2, 3);
    auto res = smith_normal_form(z);
    CHECK(res.d == z);
    check_snf_contract(z);

    Matrix<i64> m(3, 2);
    m.at(0, 0) = 2;
    m.at(1, 0) = 4;
    m.at(2, 1) = 6;
    check_snf_contract(m);
}

TEST_CASE("random integer matrices satisfy the contract") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<i64> val(-30, 30);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int t = 0; t < 200; ++t) {
        Matrix<i64> m(dim(rng), dim(rng));
        for (auto& v : m.a) v = val(rng);
        check_snf_contract(m);
    }
}

TEST_CASE("gaussian-integer matrices satisfy the contract") {
    std::mt19937 rng(6);
    std::uniform_int_distribution<i64> val(-10, 10);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int t = 0; t < 150; ++t) {
        Matrix<GaussianInt> m(dim(rng), dim(rng));
        for (auto& v : m.a) v = GaussianInt{val(rng), val(rng)};
        check_snf_contract(m);
    }
}

TEST_CASE("gaussian matrices serialize as arrays of a+bi strings") {
    Matrix<GaussianInt> m(2, 2);
    m.at(0, 0) = GaussianInt{1, 1};
    m.at(0, 1) = GaussianInt{-2};
    m.at(1, 0) = GaussianInt{0, -3};
    m.at(1, 1) = GaussianInt{};
    auto j = matrix_to_json(m);
    CHECK(j.dump() == R"([["1+i","-2"],["-3i","0"]])");
    CHECK(gaussian_matrix_from_json(j) == m);
    CHECK_THROWS_AS(gaussian_matrix_from_json(nlohmann::json::parse(R"([["1"],["2","3"]])")),
                    std::invalid_argument);
}

TEST_CASE("relation matrix of Z[i]/(1+i)^3 as a Z[i]-module and as a Z-module") {
    GaussianInt p{1, 1};
    GaussianInt z = p * p * p;

    Matrix<GaussianInt> m(1, 1);
    m.at(0, 0) = z;
    auto res = smith_normal_form(m);
    CHECK(res.diagonal() == std::vector<GaussianInt>{GaussianInt{2, 2}});  // canonical associate

    // brute-force coset enumeration of Z[i]/((1+i)^3): classify a box of
    // representatives by divisibility of differences, then read off the
    // additive order statistics
    std::vector<GaussianInt> reps;
    for (i64 re = -3; re <= 3; ++re)
        for (i64 im = -3; im <= 3; ++im) {
            GaussianInt w{re, im};
            bool fresh = true;
            for (auto& r : reps)
                if (divides(z, w - r)) { fresh = false; break; }
            if (fresh) reps.push_back(w);
        }
    CHECK(static_cast<i64>(reps.size()) == z.norm());
    std::map<i64, i64> counts;
    for (auto& r : reps) {
        i64 ord = 1;
        GaussianInt acc = r;
        while (!divides(z, acc)) {
            acc = acc + r;
            ++ord;
        }
        counts[ord] += 1;
    }
    auto group = AbelianGroup::from_order_statistics(counts, z.norm());
    CHECK(group == AbelianGroup::from_orders({4, 2}));
    CHECK(group == quotient_additive_structure(z));
}
