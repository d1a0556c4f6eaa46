// Exact arithmetic layers: finite fields, polynomials over them, matrices,
// cyclotomic numbers, and the root embedding that ties the last two together.
#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "blocklab/brauer.hpp"
#include "blocklab/char_table.hpp"
#include "blocklab/cyclotomic.hpp"
#include "blocklab/fq_matrix.hpp"
#include "blocklab/gf.hpp"
#include "blocklab/gf_poly.hpp"

using namespace blocklab;

TEST_CASE("GF(4) and GF(9) use the canonical modulus") {
    auto F4 = field_create(2, 2);
    REQUIRE(F4->modulus() == std::vector<int>{1, 1});  // x^2 + x + 1
    REQUIRE(F4->mul(2, 2) == 3);                       // x * x = x + 1
    REQUIRE(F4->mul(2, 3) == 1);
    REQUIRE(F4->add(2, 3) == 1);
    REQUIRE(F4->inv(2) == 3);

    auto F9 = field_create(3, 2);
    REQUIRE(F9->modulus() == std::vector<int>{2, 1});  // x^2 + x + 2
    REQUIRE(F9->mul(3, 3) == 7);                       // x * x = 2x + 1
    REQUIRE(F9->generator() == 3);
}

TEST_CASE("field axioms hold elementwise") {
    for (auto [p, m] : {std::pair<long long, int>{2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
        auto Fp = field_create(p, m);
        const FiniteField& F = *Fp;
        long long q = F.q();
        REQUIRE(F.element_order(F.generator()) == q - 1);
        for (std::uint32_t a = 0; a < q; ++a) {
            REQUIRE(F.add(a, F.neg(a)) == 0);
            REQUIRE(F.pow(a, q) == a);  // Frobenius fixed field of x -> x^q
            if (a != 0) {
                REQUIRE(F.mul(a, F.inv(a)) == 1);
                REQUIRE(F.pow(a, q - 1) == 1);
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(F.add(a, b) == F.add(b, a));
                REQUIRE(F.mul(a, b) == F.mul(b, a));
                // Frobenius is additive
                REQUIRE(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
            }
        }
        REQUIRE(F.from_int(-1) == F.sub(0, 1));
        REQUIRE(F.from_int(p) == 0);
    }
    REQUIRE_THROWS_AS(field_create(4, 1), input_error);
    REQUIRE_THROWS_AS(FiniteField(2, 30), input_error);
}

TEST_CASE("polynomial division leaves a small remainder") {
    auto F = field_create(5, 1);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = detail::random_poly(*F, 7, rng);
        Poly b = detail::random_poly(*F, 3, rng);
        if (poly_deg(b) < 0) continue;
        auto [q, r] = poly_divmod(*F, a, b);
        REQUIRE(poly_deg(r) < poly_deg(b));
        Poly back = poly_add(*F, poly_mul(*F, q, b), r);
        REQUIRE(back == a);
    }
}

TEST_CASE("polynomial gcd finds the common factor") {
    auto F = field_create(7, 1);
    Poly x1{1, 1}, x2{2, 1}, x3{3, 1};  // x+1, x+2, x+3
    Poly g = poly_gcd(*F, poly_mul(*F, x1, x2), poly_mul(*F, x1, x3));
    REQUIRE(g == x1);  // monic
    Poly coprime = poly_gcd(*F, x2, x3);
    REQUIRE(coprime == Poly{1});
}

TEST_CASE("polynomial evaluation and roots") {
    auto F = field_create(7, 1);
    // f = (x - 1)(x - 3) = x^2 - 4x + 3 = x^2 + 3x + 3
    Poly f{3, 3, 1};
    REQUIRE(poly_eval(*F, f, 1) == 0);
    REQUIRE(poly_eval(*F, f, 3) == 0);
    REQUIRE(poly_eval(*F, f, 2) == F->mul(F->sub(2, 1), F->sub(2, 3)));
    auto roots = poly_roots(*F, f);
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots == std::vector<std::uint32_t>{1, 3});

    // powmod agrees with iterated mulmod
    Poly base{2, 1}, mod{3, 0, 1};
    Poly it{1};
    for (int k = 0; k < 9; ++k) it = poly_mulmod(*F, it, base, mod);
    REQUIRE(poly_powmod(*F, base, BigInt(9), mod) == it);
}

TEST_CASE("smallest irreducible factor") {
    auto F = field_create(3, 1);
    std::mt19937_64 rng(5);
    // (x + 1)(x^2 + 1): x^2 + 1 is irreducible over GF(3), so degree 1 wins
    Poly f = poly_mul(*F, Poly{1, 1}, Poly{1, 0, 1});
    REQUIRE(smallest_irreducible_factor(*F, f, rng) == Poly{1, 1});
    // an irreducible comes back unchanged, made monic
    std::mt19937_64 rng2(5);
    REQUIRE(smallest_irreducible_factor(*F, Poly{2, 0, 2}, rng2) == Poly{1, 0, 1});
    // deterministic under a fixed seed
    auto F9 = field_create(3, 2);
    Poly big{1, 2, 0, 1, 1};
    std::mt19937_64 ra(99), rb(99);
    REQUIRE(smallest_irreducible_factor(*F9, big, ra) == smallest_irreducible_factor(*F9, big, rb));
}

namespace {

// independent row reduction that only uses field scalar ops
int oracle_rank(const FqMatrix& A) {
    const FiniteField& F = *A.field();
    std::vector<std::vector<std::uint32_t>> rows(A.rows(), std::vector<std::uint32_t>(A.cols()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) rows[i][j] = A.at(i, j);
    int rank = 0;
    for (int c = 0; c < A.cols(); ++c) {
        int prow = -1;
        for (int i = rank; i < A.rows(); ++i)
            if (rows[i][c]) {
                prow = i;
                break;
            }
        if (prow == -1) continue;
        std::swap(rows[prow], rows[rank]);
        std::uint32_t s = F.inv(rows[rank][c]);
        for (auto& v : rows[rank]) v = F.mul(v, s);
        for (int i = 0; i < A.rows(); ++i) {
            if (i == rank || !rows[i][c]) continue;
            std::uint32_t f = rows[i][c];
            for (int j = 0; j < A.cols(); ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

FqMatrix random_matrix(const FieldPtr& F, int r, int c, std::mt19937_64& rng) {
    FqMatrix A(F, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) A.at(i, j) = static_cast<std::uint32_t>(rng() % F->q());
    return A;
}

}  // namespace

TEST_CASE("matrix rank and kernels against an independent elimination") {
    auto F = field_create(2, 2);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        FqMatrix A = random_matrix(F, 5, 4, rng);
        int rk = oracle_rank(A);
        REQUIRE(A.rank() == rk);

        FqMatrix K = A.left_kernel();
        REQUIRE(K.rows() == A.rows() - rk);
        if (K.rows() > 0) REQUIRE((K * A).is_zero());
        REQUIRE(K.rank() == K.rows());

        FqMatrix N = A.kernel_basis();  // right null space, one vector per row
        REQUIRE(N.rows() == A.cols() - rk);
        if (N.rows() > 0) REQUIRE((A * N.transposed()).is_zero());

        // rref keeps the row space: every original row must be expressible
        FqMatrix R = A;
        std::vector<int> piv = R.rref();
        REQUIRE(static_cast<int>(piv.size()) == rk);
        // discard zero rows before expressing
        FqMatrix Rr(F, rk, A.cols());
        for (int i = 0; i < rk; ++i)
            for (int j = 0; j < A.cols(); ++j) Rr.at(i, j) = R.at(i, j);
        FqMatrix X = express_in_rowspace(Rr, piv, A);
        REQUIRE(X * Rr == A);
    }
}

TEST_CASE("matrix inverse and singularity") {
    auto F = field_create(5, 1);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        FqMatrix A = random_matrix(F, 4, 4, rng);
        if (A.rank() < 4) {
            REQUIRE_THROWS_AS(A.inverse(), internal_error);
            continue;
        }
        FqMatrix B = A.inverse();
        REQUIRE(A * B == FqMatrix::identity(F, 4));
        REQUIRE(B * A == FqMatrix::identity(F, 4));
    }
}

TEST_CASE("characteristic polynomial") {
    auto F = field_create(7, 1);
    SECTION("diagonal matrix gives the product of linear factors") {
        FqMatrix D(F, 3, 3);
        D.at(0, 0) = 2;
        D.at(1, 1) = 2;
        D.at(2, 2) = 5;
        Poly want{1};
        for (std::uint32_t lam : {2u, 2u, 5u}) want = poly_mul(*F, want, Poly{F->neg(lam), 1});
        REQUIRE(D.charpoly() == want);
    }
    SECTION("companion matrix recovers its polynomial") {
        // f = x^3 + 4x + 1
        Poly f{1, 4, 0, 1};
        FqMatrix C(F, 3, 3);
        C.at(1, 0) = 1;
        C.at(2, 1) = 1;
        for (int i = 0; i < 3; ++i) C.at(i, 2) = F->neg(static_cast<std::uint32_t>(f[i]));
        REQUIRE(C.charpoly() == f);
    }
    SECTION("Cayley-Hamilton on random matrices") {
        auto F9 = field_create(3, 2);
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 10; ++trial) {
            FqMatrix A = random_matrix(F9, 4, 4, rng);
            REQUIRE(poly_eval_matrix(A.charpoly(), A).is_zero());
        }
    }
}

TEST_CASE("cyclotomic arithmetic") {
    auto B5 = cyclo_basis(5);
    REQUIRE(B5->d == euler_phi(5));
    Cyclotomic sum;
    for (long long k = 0; k < 5; ++k) sum += Cyclotomic::root(B5, k);
    REQUIRE(sum.is_zero());

    auto z = Cyclotomic::root(B5, 1);
    REQUIRE(z * Cyclotomic::root(B5, 4) == Cyclotomic(1));  // z * conj(z) on the unit circle
    REQUIRE(z.conjugated() == Cyclotomic::root(B5, 4));
    Cyclotomic p = Cyclotomic(1);
    for (int k = 0; k < 5; ++k) p *= z;
    REQUIRE(p == Cyclotomic(1));
    REQUIRE(Cyclotomic::root(B5, 2) * Cyclotomic::root(B5, 3) == Cyclotomic(1));
    REQUIRE(z.galois(2) == Cyclotomic::root(B5, 2));
    REQUIRE((z + Cyclotomic::root(B5, 2)).galois(3) ==
            Cyclotomic::root(B5, 3) + Cyclotomic::root(B5, 1));

    // embedding into a larger conductor preserves the value
    auto B15 = cyclo_basis(15);
    REQUIRE(z.embedded(B15) == Cyclotomic::root(B15, 3));

    REQUIRE(Cyclotomic(Rational(2, 3)).is_rational());
    REQUIRE_FALSE(z.is_rational());
    REQUIRE((z + z.conjugated() + Cyclotomic::root(B5, 2) + Cyclotomic::root(B5, 3)).rational_value() ==
            Rational(-1));
}

TEST_CASE("cyclotomic values match complex floating point") {
    const double pi = 3.14159265358979323846;
    for (int e : {3, 4, 5, 8, 12}) {
        auto B = cyclo_basis(e);
        for (long long j = 0; j < e; ++j)
            for (long long k = 0; k < e; ++k) {
                Cyclotomic v = Cyclotomic::root(B, j) * Cyclotomic::root(B, k) + Cyclotomic::root(B, j);
                std::complex<double> zj = std::polar(1.0, 2 * pi * j / e);
                std::complex<double> zk = std::polar(1.0, 2 * pi * k / e);
                std::complex<double> want = zj * zk + zj;
                std::complex<double> got(0, 0);
                const auto& c = v.coeffs();
                for (std::size_t t = 0; t < c.size(); ++t)
                    got += c[t].convert_to<double>() *
                           std::polar(1.0, 2 * pi * static_cast<double>(t) / v.conductor());
                REQUIRE(std::abs(got - want) < 1e-9);
            }
    }
}

TEST_CASE("root embedding is a bijection on tame roots of unity") {
    // GF(7), conductor 6: every 6th root of unity has a modular image
    auto F = field_create(7, 1);
    auto B = cyclo_basis(6);
    RootEmbedding R = make_root_embedding(F, B);
    for (long long k = 0; k < 6; ++k) {
        std::uint32_t w = R.reduce(Cyclotomic::root(B, k));
        REQUIRE(R.lift_root(w) == Cyclotomic::root(B, k));
        for (long long j = 0; j < 6; ++j) {
            auto prod = Cyclotomic::root(B, k) * Cyclotomic::root(B, j);
            REQUIRE(R.reduce(prod) == F->mul(w, R.reduce(Cyclotomic::root(B, j))));
        }
    }
    // reduce is additive on sums with rational parts
    auto v = Cyclotomic::root(B, 1) + Cyclotomic(Rational(3, 2));
    REQUIRE(R.reduce(v) == F->add(R.reduce(Cyclotomic::root(B, 1)), rational_mod_p(Rational(3, 2), 7)));
}

TEST_CASE("root embedding kills the wild part of the conductor") {
    // conductor 21 over characteristic 7: the 7-part of a root maps to 1
    auto F = field_create(7, 1);
    auto B = cyclo_basis(21);
    RootEmbedding R = make_root_embedding(F, B);
    REQUIRE(R.eprime == 3);
    REQUIRE(R.reduce(Cyclotomic::root(B, 3)) != 0);                  // order-7 root
    REQUIRE(R.reduce(Cyclotomic::root(B, 3)) == 1);                  // ... maps to 1
    std::uint32_t cube = R.reduce(Cyclotomic::root(B, 7));           // order-3 root
    REQUIRE(F->element_order(cube) == 3);
}

TEST_CASE("rationals reduce mod p") {
    REQUIRE(rational_mod_p(Rational(1, 2), 7) == 4);
    REQUIRE(rational_mod_p(Rational(3), 7) == 3);
    REQUIRE(rational_mod_p(Rational(-1, 2), 7) == 3);
    REQUIRE(rational_mod_p(Rational(0), 5) == 0);
    REQUIRE_THROWS_AS(rational_mod_p(Rational(1, 7), 7), internal_error);
}

TEST_CASE("splitting prime selection") {
    REQUIRE(dixon_prime(6, 6) == 7);
    REQUIRE(dixon_prime(24, 12) == 13);
    REQUIRE(dixon_prime(8, 4) == 13);  // 5^2 < 32, 9 is composite
    for (auto [n, e] : {std::pair<long long, long long>{60, 30}, {120, 60}, {21, 21}}) {
        long long ell = dixon_prime(n, e);
        REQUIRE(is_prime(ell));
        REQUIRE(ell % e == 1);
        REQUIRE(ell * ell > 4 * n);
        // minimal: no smaller prime with both properties
        for (long long c = e + 1; c < ell; c += e) REQUIRE(!(is_prime(c) && c * c > 4 * n));
    }
}

TEST_CASE("exact linear solver") {
    using detail::solve_unique;
    std::vector<std::vector<Rational>> A{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    std::vector<Rational> b{Rational(3), Rational(1)};
    auto x = solve_unique(A, b);
    REQUIRE(x == std::vector<Rational>{Rational(2), Rational(1)});

    // overdetermined but consistent
    std::vector<std::vector<Rational>> A2{{Rational(1), Rational(0)},
                                          {Rational(0), Rational(1)},
                                          {Rational(1), Rational(1)}};
    std::vector<Rational> b2{Rational(1, 2), Rational(1, 3), Rational(5, 6)};
    auto x2 = solve_unique(A2, b2);
    REQUIRE(x2 == std::vector<Rational>{Rational(1, 2), Rational(1, 3)});

    std::vector<Rational> b3{Rational(1, 2), Rational(1, 3), Rational(1)};
    REQUIRE_THROWS_AS(solve_unique(A2, b3), internal_error);

    std::vector<std::vector<Rational>> A4{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    std::vector<Rational> b4{Rational(1), Rational(2)};
    REQUIRE_THROWS_AS(solve_unique(A4, b4), internal_error);
}

TEST_CASE("number theory helpers") {
    REQUIRE(valuation(48, 2) == 4);
    REQUIRE(p_part(48, 2) == 16);
    REQUIRE(pprime_part(48, 2) == 3);
    REQUIRE(prime_factors(60) == std::vector<long long>{2, 3, 5});
    REQUIRE(euler_phi(21) == 12);
    REQUIRE(mult_order_mod(2, 7) == 3);
    REQUIRE(mult_order_mod(3, 1) == 1);
    REQUIRE(mod_inv(3, 7) == 5);
    REQUIRE(!is_prime(1));
    REQUIRE(is_prime(2));
    REQUIRE(!is_prime(91));
}
