#include <doctest.h>

#include <cmath>

#include "effinfo/deterministic.hpp"
#include "effinfo/errors.hpp"
#include "effinfo/info.hpp"

using namespace effinfo;

namespace {

DeterministicMap identity_map(std::size_t n) {
    std::vector<std::size_t> table(n);
    for (std::size_t i = 0; i < n; ++i) table[i] = i;
    return DeterministicMap(Alphabet::indexed(n), Alphabet::indexed(n, "y"), table);
}

DeterministicMap constant_map(std::size_t n) {
    return DeterministicMap(Alphabet::indexed(n), Alphabet{"y0", "y1"},
                            std::vector<std::size_t>(n, 0));
}

// 0, 1, 2 -> A and 3 -> B
DeterministicMap three_to_one() {
    return DeterministicMap(Alphabet{"0", "1", "2", "3"}, Alphabet{"A", "B"}, {0, 0, 0, 1});
}

// Calls fn on every total map X -> Y with |X| = nx and |Y| = ny.
template <typename Fn>
void for_each_map(std::size_t nx, std::size_t ny, Fn fn) {
    std::vector<std::size_t> table(nx, 0);
    while (true) {
        fn(DeterministicMap(Alphabet::indexed(nx), Alphabet::indexed(ny, "y"), table));
        std::size_t i = 0;
        while (i < nx && ++table[i] == ny) table[i++] = 0;
        if (i == nx) return;
    }
}

}  // namespace

TEST_CASE("map validation") {
    CHECK_THROWS_AS(DeterministicMap(Alphabet{"a", "b"}, Alphabet{"y"}, {0}), ValidationError);
    CHECK_THROWS_AS(DeterministicMap(Alphabet{"a"}, Alphabet{"y"}, {1}), ValidationError);
}

TEST_CASE("preimage") {
    CHECK(preimage(identity_map(3), 1) == std::vector<std::size_t>{1});
    CHECK(preimage(constant_map(4), 0) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(preimage(constant_map(4), 1).empty());
    CHECK(preimage(three_to_one(), 0) == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(preimage(three_to_one(), 2), ValidationError);
}

TEST_CASE("channel_of_map") {
    CHECK(channel_of_map(identity_map(2)).matrix() ==
          std::vector<std::vector<double>>{{1, 0}, {0, 1}});
    CHECK(channel_of_map(constant_map(3)).matrix() ==
          std::vector<std::vector<double>>{{1, 0}, {1, 0}, {1, 0}});
    CHECK(channel_of_map(three_to_one()).matrix() ==
          std::vector<std::vector<double>>{{1, 0}, {1, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("effective_probability") {
    CHECK(effective_probability(constant_map(4), 0) == Rational(1));
    CHECK(effective_probability(constant_map(4), 1) == Rational(0));
    CHECK(effective_probability(identity_map(5), 3) == Rational(1, 5));
    CHECK(effective_probability(three_to_one(), 0) == Rational(3, 4));
    CHECK(effective_probability(three_to_one(), 1) == Rational(1, 4));
}

TEST_CASE("ei_deterministic") {
    CHECK(ei_deterministic(identity_map(8), 5).value == 3.0);
    CHECK(ei_deterministic(constant_map(4), 0).value == 0.0);
    CHECK(ei_deterministic(three_to_one(), 0).value == doctest::Approx(2.0 - std::log2(3.0)).epsilon(1e-15));
    CHECK(ei_deterministic(three_to_one(), 1).value == 2.0);
    CHECK_THROWS_AS(ei_deterministic(constant_map(4), 1), UndefinedQuantityError);
}

TEST_CASE("actual_repertoire_det") {
    const auto id = identity_map(4);
    CHECK(actual_repertoire_det(id, 2) == Distribution::point_mass(id.input(), 2));
    const auto c = actual_repertoire_det(constant_map(4), 0);
    for (double p : c.probs()) CHECK(p == 0.25);
    const auto r = actual_repertoire_det(three_to_one(), 0);
    CHECK(r[0] == doctest::Approx(1.0 / 3));
    CHECK(r[2] == doctest::Approx(1.0 / 3));
    CHECK(r[3] == 0.0);
    CHECK_THROWS_AS(actual_repertoire_det(constant_map(3), 1), UndefinedQuantityError);
}

TEST_CASE("exhaustive: closed form agrees with the channel pipeline") {
    std::size_t maps = 0;
    for (std::size_t nx = 1; nx <= 4; ++nx) {
        for (std::size_t ny = 1; ny <= 3; ++ny) {
            for_each_map(nx, ny, [&](const DeterministicMap& f) {
                ++maps;
                const Channel m = channel_of_map(f);
                const auto u = Distribution::uniform(f.input());
                Rational total(0);
                std::vector<int> owner(nx, -1);
                for (std::size_t y = 0; y < ny; ++y) {
                    const Rational p = effective_probability(f, y);
                    total += p;
                    for (std::size_t x : preimage(f, y)) {
                        CHECK(owner[x] == -1);
                        owner[x] = static_cast<int>(y);
                    }
                    if (p.numerator() == 0) {
                        CHECK_THROWS_AS(ei_deterministic(f, y), UndefinedQuantityError);
                        continue;
                    }
                    const double ei = ei_deterministic(f, y).value;
                    CHECK(std::abs(ei - effective_information(m, u, y).value) < 1e-9);
                    CHECK(std::abs(ei + std::log2(to_double(p))) < 1e-12);
                    const auto a = actual_repertoire_det(f, y);
                    const auto b = actual_repertoire(m, u, y);
                    for (std::size_t x = 0; x < nx; ++x) CHECK(std::abs(a[x] - b[x]) < 1e-12);
                }
                CHECK(total == Rational(1));
                for (int o : owner) CHECK(o >= 0);
            });
        }
    }
    // sum over nx <= 4, ny <= 3 of ny^nx
    CHECK(maps == 1 + 2 + 3 + 1 + 4 + 9 + 1 + 8 + 27 + 1 + 16 + 81);
}
