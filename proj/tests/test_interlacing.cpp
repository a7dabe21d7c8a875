#include "ncdup/interlacing.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncdup;

namespace {

DeterminingElement det(std::initializer_list<Rational> v) { return {Vec(v)}; }

const SetMap kRoundTrip({1, 0});

// Every a in {0,-1}^n with zeros on loop vertices.
std::vector<DeterminingElement> all_01(const SetMap& m) {
    std::vector<DeterminingElement> out;
    const std::size_t n = m.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        DeterminingElement a{Vec(n)};
        bool skip = false;
        for (std::size_t x = 0; x < n; ++x)
            if ((mask >> x) & 1) {
                if (m.is_fixed(x)) skip = true;
                a.values[x] = -1;
            }
        if (!skip) out.push_back(a);
    }
    return out;
}

bool is_interlacing(const SetMap& m, const DeterminingElement& a) {
    const Matrix f = setmap_matrix(m);
    return check_pair(f, derivation_matrix(m, a));
}

} // namespace

TEST(Endomorphism, PreimageColumns) {
    const Endomorphism f = endomorphism_from_setmap(SetMap({0, 0}));
    EXPECT_EQ(f.matrix.column(0), (Vec{Rational(1), Rational(1)}));
    EXPECT_EQ(f.matrix.column(1), (Vec{Rational(0), Rational(0)}));
    EXPECT_EQ(endomorphism_from_setmap(SetMap::identity(3)).matrix, Matrix::identity(3));
    const Endomorphism g = endomorphism_from_setmap(kRoundTrip);
    EXPECT_EQ(g.matrix.column(0), unit_vec(2, 1));
    EXPECT_EQ(g.matrix.column(1), unit_vec(2, 0));
}

TEST(Derivation, RoundTripValues) {
    const Derivation d = derivation_from_element(endomorphism_from_setmap(kRoundTrip), det({0, -1}));
    EXPECT_EQ(d.matrix.column(0), (Vec{Rational(0), Rational(-1)})); // delta(u) = -v
    // delta(v) = a_u u - a_v v = v; a zero value here would break delta^2 = delta.
    EXPECT_EQ(d.matrix.column(1), (Vec{Rational(0), Rational(1)}));
}

TEST(Derivation, LoopWithTailValues) {
    const Derivation d = derivation_from_element(endomorphism_from_setmap(SetMap({0, 0})), det({0, -1}));
    EXPECT_EQ(d.matrix.column(0), (Vec{Rational(0), Rational(-1)}));
    EXPECT_EQ(d.matrix.column(1), (Vec{Rational(0), Rational(1)}));
}

TEST(Derivation, ZeroElementGivesZeroMap) {
    const SetMap m({1, 2, 2, 0});
    EXPECT_TRUE(derivation_matrix(m, DeterminingElement{Vec(4)}).is_zero());
}

TEST(Derivation, RejectsNonNormalizedElement) {
    const Endomorphism f = endomorphism_from_setmap(SetMap({0, 0}));
    EXPECT_THROW(derivation_from_element(f, det({1, 0})), PreconditionError);
    EXPECT_THROW(is_normalized(SetMap({0, 0}), det({0})), std::invalid_argument);
    auto [a, changed] = normalize(SetMap({0, 0}), det({5, -1}));
    EXPECT_TRUE(changed);
    EXPECT_EQ(a, det({0, -1}));
}

TEST(Derivation, LeibnizHoldsForEveryNormalizedElement) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const SetMap m = SetMap::from_index(n, rng() % SetMap::count(n));
        DeterminingElement a{Vec(n)};
        for (std::size_t x = 0; x < n; ++x)
            if (!m.is_fixed(x)) a.values[x] = Rational(static_cast<long long>(rng() % 9) - 4, 1 + rng() % 4);
        const Derivation d = derivation_from_element(endomorphism_from_setmap(m), a);
        EXPECT_TRUE(satisfies_leibniz(setmap_matrix(m), d.matrix));
        // Independent composition against the closed form.
        EXPECT_EQ(d.matrix * d.matrix, delta_squared_closed_form(m, a));
        EXPECT_EQ(delta_squared(d), d.matrix * d.matrix);
    }
}

TEST(Derivation, LeibnizFailsForArbitraryMatrix) {
    Matrix bogus = Matrix::identity(2);
    EXPECT_FALSE(satisfies_leibniz(setmap_matrix(kRoundTrip), bogus));
}

TEST(DeltaSquared, IdempotentExactlyForColorationValues) {
    const Matrix ok = derivation_matrix(kRoundTrip, det({0, -1}));
    EXPECT_EQ(ok * ok, ok);
    const Matrix bad = derivation_matrix(kRoundTrip, det({1, 1}));
    EXPECT_NE(bad * bad, bad);
}

TEST(Precoloration, EquivalentToIdempotentDerivation) {
    // Off round trips, pre-colorations are exactly the a with delta^2 = delta among {0,-1}-valued ones.
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t c = 0; c < SetMap::count(n); ++c) {
            const SetMap m = SetMap::from_index(n, c);
            for (const auto& a : all_01(m)) {
                const Matrix d = derivation_matrix(m, a);
                EXPECT_EQ(is_precoloration(m, a), d * d == d) << "code " << c;
            }
        }
}

TEST(Precoloration, Examples) {
    EXPECT_TRUE(is_precoloration(kRoundTrip, det({0, 0})));
    EXPECT_TRUE(is_precoloration(kRoundTrip, det({Rational(1, 2), Rational(-3, 2)})));
    // A 2-cycle with a tail is not a round trip, so the product clause applies.
    const auto v = precoloration_violations(SetMap({1, 0, 0}), det({-1, -1, 0}));
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front(), "arrow 0->1: product of colours is not 0");
    const auto w = precoloration_violations(SetMap({1, 2, 3, 0}), det({-1, -1, 0, 0}));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w.front(), "arrow 0->1: product of colours is not 0");
    EXPECT_EQ(precoloration_violations(SetMap({1, 2, 3, 0}), det({2, 0, 0, 0})).front(), "vertex 0: value 2 not in {0,-1}");
}

TEST(Coloration, EquivalentToInterlacingOnDiscreteValues) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t c = 0; c < SetMap::count(n); ++c) {
            const SetMap m = SetMap::from_index(n, c);
            for (const auto& a : all_01(m)) EXPECT_EQ(is_coloration(m, a), is_interlacing(m, a)) << "code " << c;
        }
}

TEST(Coloration, RoundTripFamilyIsInterlacing) {
    for (const Rational t : {Rational(0), Rational(-1), Rational(1, 2), Rational(-3), Rational(7, 5)}) {
        const auto a = det({t, Rational(-1) - t});
        EXPECT_TRUE(is_coloration(kRoundTrip, a));
        EXPECT_TRUE(is_interlacing(kRoundTrip, a));
    }
    EXPECT_FALSE(is_coloration(kRoundTrip, det({0, 0})));
    EXPECT_FALSE(is_interlacing(kRoundTrip, det({0, 0})));
    EXPECT_EQ(coloration_violations(kRoundTrip, det({0, 0})).front(), "round trip {0,1}: a_u + a_v + 1 != 0");
}

TEST(Coloration, OddCycleHasNone) {
    const SetMap m({1, 2, 0});
    for (const auto& a : all_01(m)) EXPECT_FALSE(is_coloration(m, a));
    const ColorationSet cs = enumerate_colorations(m);
    EXPECT_TRUE(cs.discrete.empty());
    EXPECT_TRUE(cs.parametric.empty());
    // Odd cycle beside a round trip: still nothing.
    EXPECT_TRUE(enumerate_colorations(SetMap({1, 2, 0, 4, 3})).discrete.empty());
}

TEST(Coloration, EnumerationExamples) {
    EXPECT_EQ(enumerate_colorations(SetMap({1, 2, 3, 0})).discrete.size(), 2u);
    const ColorationSet rt = enumerate_colorations(kRoundTrip);
    EXPECT_EQ(rt.discrete.size(), 2u);
    ASSERT_EQ(rt.parametric.size(), 1u);
    EXPECT_EQ(rt.parametric[0], (std::array<std::size_t, 2>{0, 1}));

    const ColorationSet lt = enumerate_colorations(SetMap({0, 0, 1}));
    ASSERT_EQ(lt.discrete.size(), 2u);
    std::vector<Vec> got{lt.discrete[0].values, lt.discrete[1].values};
    std::sort(got.begin(), got.end(), [](const Vec& x, const Vec& y) { return x[1] < y[1]; });
    EXPECT_EQ(got[0], (Vec{Rational(0), Rational(-1), Rational(0)}));
    EXPECT_EQ(got[1], (Vec{Rational(0), Rational(0), Rational(-1)}));
}

TEST(Coloration, EnumerationMatchesBruteForce) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t c = 0; c < SetMap::count(n); ++c) {
            const SetMap m = SetMap::from_index(n, c);
            std::size_t brute = 0;
            for (const auto& a : all_01(m)) brute += is_interlacing(m, a);
            EXPECT_EQ(enumerate_colorations(m).discrete.size(), brute) << "n=" << n << " code " << c;
        }
}

TEST(Interlacing, TrivialPairIsFlip) {
    const std::size_t n = 3;
    const InterlacingMap t = tau_from_pair(Matrix::identity(n), Matrix(n, n));
    EXPECT_EQ(t.matrix, flip_map(n, 2).matrix);
    EXPECT_TRUE(check_pair(Matrix::identity(n), Matrix(n, n)));
    auto [f, d] = pair_from_tau(flip_map(n, 2));
    EXPECT_EQ(f, Matrix::identity(n));
    EXPECT_TRUE(d.is_zero());
}

TEST(Interlacing, RoundTripTau) {
    const Matrix f = setmap_matrix(kRoundTrip), d = derivation_matrix(kRoundTrip, det({0, -1}));
    EXPECT_TRUE(check_pair(f, d));
    EXPECT_FALSE(check_pair(f, derivation_matrix(kRoundTrip, det({0, 0}))));
    const InterlacingMap t = tau_from_pair(f, d);
    // tau(X (x) u) = -v (x) 1 + v (x) X.
    Vec expect(4);
    expect[1 * 2 + 0] = -1;
    expect[1 * 2 + 1] = 1;
    EXPECT_EQ(detail::tau_apply(t, unit_vec(2, 1), unit_vec(2, 0)), expect);
    auto [f2, d2] = pair_from_tau(t);
    EXPECT_EQ(f2, f);
    EXPECT_EQ(d2, d);
}

TEST(Interlacing, FlipBraidsArbitraryAlgebras) {
    EXPECT_TRUE(check_braiding(flip_map(3, 2), set_algebra(3), idempotent_line_algebra()));
    EXPECT_TRUE(check_braiding(flip_map(2, 3), idempotent_line_algebra(), set_algebra(3)));
    EXPECT_THROW(check_braiding(flip_map(2, 2), set_algebra(3), idempotent_line_algebra()), std::invalid_argument);
}

TEST(Interlacing, BraidingMatchesColorationExhaustively) {
    const Algebra B = idempotent_line_algebra();
    for (std::size_t n = 1; n <= 3; ++n) {
        const Algebra A = set_algebra(n);
        for (std::uint64_t c = 0; c < SetMap::count(n); ++c) {
            const SetMap m = SetMap::from_index(n, c);
            const Matrix f = setmap_matrix(m);
            for (const auto& a : all_01(m)) {
                const Matrix d = derivation_matrix(m, a);
                const InterlacingMap t = tau_from_pair(f, d);
                EXPECT_EQ(check_braiding(t, A, B), is_coloration(m, a));
                auto [f2, d2] = pair_from_tau(t);
                EXPECT_EQ(f2, f);
                EXPECT_EQ(d2, d);
            }
        }
    }
}

TEST(Interlacing, CorruptedTauFailsBraiding) {
    const Matrix f = setmap_matrix(kRoundTrip), d = derivation_matrix(kRoundTrip, det({0, -1}));
    InterlacingMap t = tau_from_pair(f, d);
    t.matrix(1, 3) += 1;
    EXPECT_FALSE(check_braiding(t, set_algebra(2), idempotent_line_algebra()));
}

TEST(Interlacing, PairFromTauChecksUnits) {
    InterlacingMap t = flip_map(2, 2);
    t.matrix(0, 0) = 2;
    EXPECT_THROW(pair_from_tau(t), PreconditionError);
    EXPECT_THROW(pair_from_tau(flip_map(2, 3)), std::invalid_argument);
}

TEST(Interlacing, TwistedTensorProductIsAssociative) {
    const SetMap m({1, 0, 0, 2});
    for (const auto& a : enumerate_colorations(m).discrete) {
        const Algebra T = twisted_tensor_product(set_algebra(4), idempotent_line_algebra(),
                                                 tau_from_pair(setmap_matrix(m), derivation_matrix(m, a)));
        EXPECT_TRUE(check_algebra(T).ok());
        EXPECT_EQ(T.dim(), 8u);
    }
}
