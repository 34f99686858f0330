#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "leaperlab/leaper.hpp"

using namespace leaperlab;

namespace {

// independent nested-fraction evaluator used to freeze expected ecf values
struct Frac {
    long long num, den;
    Frac reduced() const {
        long long g = std::gcd(num, den);
        return {num / g, den / g};
    }
};

Frac eval_bracket(const std::vector<int>& outer_first_coeffs, const std::vector<int>& outer_signs) {
    // outer_first_coeffs = [c_k, c_{k-1}, ..., c_1], outer_signs = [eps_{k-1}, ..., eps_1]
    Frac v{outer_first_coeffs.back(), 1};
    for (int i = static_cast<int>(outer_first_coeffs.size()) - 2; i >= 0; --i) {
        // v := c_{i+1} + eps_{i+1} / v, walking back out
        v = Frac{outer_first_coeffs[i] * v.num + outer_signs[i] * v.den, v.num};
    }
    return v.reduced();
}

std::vector<int> outer_first(const Ecf& e) {
    return {e.coefficients.rbegin(), e.coefficients.rend()};
}
std::vector<int> outer_signs(const Ecf& e) { return {e.signs.rbegin(), e.signs.rend()}; }

bool skew_free_pair(int p, int q) {
    return 0 < p && p < q && (p + q) % 2 == 1 && std::gcd(p, q) == 1;
}
bool skew_half_free_pair(int p, int q) {
    return 0 < p && p < q && p % 2 == 1 && q % 2 == 1 && std::gcd(p, q) == 1;
}

}  // namespace

TEST_CASE("classification") {
    auto knight = classify(Leaper(1, 2));
    CHECK(knight.kind == FreenessKind::Free);
    CHECK(knight.component_count == 1);

    auto camel = classify(Leaper(1, 3));
    CHECK(camel.kind == FreenessKind::HalfFree);
    CHECK(camel.component_count == 2);

    auto l24 = classify(Leaper(2, 4));
    CHECK(l24.kind == FreenessKind::NonRelativelyPrime);
    CHECK(l24.gcd == 2);
    CHECK(l24.component_count == 4);  // (p+q)/d = 3 odd -> d^2

    auto l26 = classify(Leaper(2, 6));
    CHECK(l26.component_count == 8);  // (p+q)/d = 4 even -> 2 d^2

    CHECK(classify(Leaper(0, 1)).kind == FreenessKind::Free);
    CHECK_THROWS_AS(Leaper(0, 0), std::invalid_argument);
}

TEST_CASE("mmod") {
    CHECK(mmod(12, 5) == 2);
    CHECK(mmod(8, 4) == 0);
    CHECK(mmod(5, 10) == 5);
    CHECK(mmod(12, 7) == 2);
    CHECK(mmod(3, 4) == 1);
    for (int s = 1; s <= 40; ++s)
        for (int t = 1; t <= 40; ++t) {
            int r = mmod(s, t);
            CHECK(r <= t / 2);
            CHECK(((s - r) % t == 0 || (s + r) % t == 0));
            for (int r2 = 0; r2 < r; ++r2)
                CHECK_FALSE(((s - r2) % t == 0 || (s + r2) % t == 0));
        }
}

TEST_CASE("ecf of small leapers") {
    Ecf e12 = ecf(Leaper(1, 2));
    CHECK(e12.coefficients == std::vector<int>{2});
    CHECK(e12.depth() == 1);

    // frozen from the independent evaluator: 2 + 1/(2 + 1/2) = 12/5
    Ecf e512 = ecf(Leaper(5, 12));
    CHECK(outer_first(e512) == std::vector<int>{2, 2, 2});
    CHECK(outer_signs(e512) == std::vector<int>{1, 1});
    auto v512 = eval_bracket({2, 2, 2}, {1, 1});
    CHECK(v512.num == 12);
    CHECK(v512.den == 5);

    // 2 - 1/2 = 3/2
    Ecf e23 = ecf(Leaper(2, 3));
    CHECK(outer_first(e23) == std::vector<int>{2, 2});
    CHECK(outer_signs(e23) == std::vector<int>{-1});
    CHECK(eval_bracket({2, 2}, {-1}).num == 3);

    // 2 - 1/(2 + 1/2) = 8/5
    Ecf e58 = ecf(Leaper(5, 8));
    CHECK(outer_first(e58) == std::vector<int>{2, 2, 2});
    CHECK(outer_signs(e58) == std::vector<int>{-1, 1});
    auto v58 = eval_bracket({2, 2, 2}, {-1, 1});
    CHECK(v58.num == 8);
    CHECK(v58.den == 5);

    CHECK_THROWS_AS(ecf(Leaper(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(ecf(Leaper(2, 4)), std::invalid_argument);
}

TEST_CASE("half-free ecf") {
    Ecf camel = ecf(Leaper(1, 3));
    CHECK(camel.coefficients == std::vector<int>{3});

    Ecf e35 = ecf(Leaper(3, 5));
    CHECK(outer_first(e35) == std::vector<int>{2, 3});
    CHECK(outer_signs(e35) == std::vector<int>{-1});
    CHECK(eval_bracket({2, 3}, {-1}).num == 5);

    Ecf e15 = ecf(Leaper(1, 5));
    CHECK(e15.coefficients == std::vector<int>{5});
}

TEST_CASE("tails") {
    auto t512 = tails(Leaper(5, 12));
    CHECK(t512 == std::vector<Leaper>{Leaper(0, 1), Leaper(1, 2), Leaper(2, 5), Leaper(5, 12)});

    CHECK(tails(Leaper(1, 2)) == std::vector<Leaper>{Leaper(0, 1), Leaper(1, 2)});
    CHECK(tails(Leaper(2, 7)) == std::vector<Leaper>{Leaper(0, 1), Leaper(1, 2), Leaper(2, 7)});
    CHECK(depth(Leaper(5, 12)) == 3);
    CHECK(depth(Leaper(2, 7)) == 2);

    // half-free: no zeroth tail
    CHECK(tails(Leaper(3, 5)) == std::vector<Leaper>{Leaper(1, 3), Leaper(3, 5)});
    CHECK(depth(Leaper(3, 5)) == 2);
    CHECK(tails(Leaper(1, 5)) == std::vector<Leaper>{Leaper(1, 5)});
}

TEST_CASE("lifting on leapers") {
    Leaper knight(1, 2);
    CHECK(lift_leaper(knight, LiftType::F) == Leaper(1, 4));
    CHECK(lift_leaper(knight, LiftType::G) == Leaper(2, 3));
    CHECK(lift_leaper(knight, LiftType::H) == Leaper(2, 5));
    CHECK(lift_leaper(Leaper(0, 1), LiftType::G) == Leaper(1, 2));
    CHECK(lift_leaper(Leaper(0, 1), LiftType::H) == Leaper(1, 2));
    CHECK(lift_leaper(Leaper(0, 1), LiftType::F) == Leaper(0, 1));
    CHECK(lift_leaper(Leaper(2, 5), LiftType::H) == Leaper(5, 12));
}

TEST_CASE("parents") {
    auto p512 = parent_and_type(Leaper(5, 12));
    REQUIRE(p512.has_value());
    CHECK(p512->first == Leaper(2, 5));
    CHECK(p512->second == LiftType::H);

    CHECK(parent_and_type(Leaper(1, 4))->first == Leaper(1, 2));
    CHECK(parent_and_type(Leaper(1, 4))->second == LiftType::F);
    CHECK(parent_and_type(Leaper(2, 3))->second == LiftType::G);
    CHECK_FALSE(parent_and_type(Leaper(1, 2)).has_value());
    CHECK_FALSE(parent_and_type(Leaper(1, 3)).has_value());  // camel roots the half-free tree
    CHECK(parent_and_type(Leaper(3, 5))->first == Leaper(1, 3));
}

TEST_CASE("descent words") {
    CHECK(descent(Leaper(1, 2)).empty());
    CHECK(descent(Leaper(5, 12)) == "hh");
    CHECK(descent(Leaper(1, 4)) == "f");
    CHECK(descent(Leaper(3, 8)) == "hg");
    CHECK(leaper_of("hh") == Leaper(5, 12));
    CHECK(leaper_of("") == Leaper(1, 2));
    CHECK(leaper_of("", TreeKind::HalfFree) == Leaper(1, 3));
    CHECK(leaper_of("f", TreeKind::HalfFree) == Leaper(1, 5));
}

TEST_CASE("children and enumeration") {
    auto ch = tree_children(Leaper(1, 2));
    std::set<Leaper> got(ch.begin(), ch.end());
    CHECK(got == std::set<Leaper>{Leaper(1, 4), Leaper(2, 3), Leaper(2, 5)});

    auto e5 = tree_enumerate(5);
    std::set<Leaper> e5s;
    for (auto& t : e5) e5s.insert(t.leaper);
    CHECK(e5s == std::set<Leaper>{Leaper(1, 2), Leaper(1, 4), Leaper(2, 3)});

    auto e3 = tree_enumerate(3);
    REQUIRE(e3.size() == 1);
    CHECK(e3[0].leaper == Leaper(1, 2));
}

TEST_CASE("tree round-trips up to parameter sum 200") {
    for (TreeKind kind : {TreeKind::Free, TreeKind::HalfFree}) {
        auto entries = tree_enumerate(200, kind);
        // enumeration is exactly the filter of pairs
        std::set<Leaper> enumerated;
        for (auto& t : entries) enumerated.insert(t.leaper);
        std::set<Leaper> expected;
        for (int p = 1; p <= 200; ++p)
            for (int q = p + 1; p + q <= 200; ++q)
                if (kind == TreeKind::Free ? skew_free_pair(p, q) : skew_half_free_pair(p, q))
                    expected.insert(Leaper(p, q));
        REQUIRE(enumerated == expected);

        std::set<std::string> words;
        for (auto& t : entries) {
            // ecf evaluates back to q/p exactly
            auto [num, den] = t.ecf.value();
            CHECK(num == t.leaper.q);
            CHECK(den == t.leaper.p);
            // descent round-trips and agrees with the ecf substitution rule
            CHECK(leaper_of(t.descent, kind) == t.leaper);
            CHECK(descent_from_ecf(t.ecf, kind) == t.descent);
            CHECK(words.insert(t.descent).second);  // pairwise distinct
            // q mmod 2p = p_{kappa-1} (with p_0 = 0 at the free root)
            auto ts = tails(t.leaper);
            int idx = static_cast<int>(ts.size()) - 2;
            if (kind == TreeKind::Free) {
                int prev_p = idx >= 0 ? ts[idx].p : 0;
                CHECK(mmod(t.leaper.q, 2 * t.leaper.p) == prev_p);
            }
            // tail recurrence: each tail's ecf is the suffix
            for (size_t i = (kind == TreeKind::Free ? 1u : 0u); i < ts.size(); ++i) {
                size_t suffix_len = i + (kind == TreeKind::Free ? 0 : 1);
                Ecf sub = ecf(ts[i]);
                REQUIRE(sub.coefficients.size() == suffix_len);
                for (size_t j = 0; j < suffix_len; ++j)
                    CHECK(sub.coefficients[j] == t.ecf.coefficients[j]);
                for (size_t j = 0; j + 1 < suffix_len; ++j)
                    CHECK(sub.signs[j] == t.ecf.signs[j]);
            }
            // child ecf rules
            Ecf ef = ecf(lift_leaper(t.leaper, LiftType::F));
            CHECK(ef.coefficients.back() == t.ecf.coefficients.back() + 2);
            Ecf eg = ecf(lift_leaper(t.leaper, LiftType::G));
            CHECK(eg.coefficients.back() == 2);
            CHECK(eg.signs.back() == -1);
            Ecf eh = ecf(lift_leaper(t.leaper, LiftType::H));
            CHECK(eh.coefficients.back() == 2);
            CHECK(eh.signs.back() == +1);
            // parent parameter sum strictly smaller
            if (auto up = parent_and_type(t.leaper))
                CHECK(up->first.sum() < t.leaper.sum());
        }
    }
}
