#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "svpwm/dwell.hpp"
#include "svpwm/sequence.hpp"
#include "svpwm/synthesis.hpp"
#include "oracles.hpp"

using namespace svpwm;

namespace {

int hamming(const SwitchState& a, const SwitchState& b) {
    return (a.a != b.a) + (a.b != b.b) + (a.c != b.c);
}

std::vector<int> ids_of(const std::vector<PlaylistSlot>& slots) {
    std::vector<int> ids;
    for (const auto& s : slots) ids.push_back(s.vector_id);
    return ids;
}

} // namespace

TEST_CASE("names round-trip") {
    for (auto seq : {Sequence::Csv, Sequence::Abc1, Sequence::Abc2,
                     Sequence::Svhe})
        CHECK(sequence_from_name(sequence_name(seq)) == seq);
    CHECK_THROWS_AS(sequence_from_name("csv2"), std::domain_error);
    CHECK_THROWS_AS(sequence_from_name(""), std::domain_error);
}

TEST_CASE("switch states walk the hexagon one leg at a time") {
    CHECK(vector_switch_state(0) == SwitchState{0, 0, 0});
    CHECK(vector_switch_state(1) == SwitchState{1, 0, 0});
    CHECK(vector_switch_state(7) == SwitchState{1, 1, 1});
    for (int s = 1; s <= 6; ++s) {
        const int next = s == 6 ? 1 : s + 1;
        CHECK(hamming(vector_switch_state(s), vector_switch_state(next)) == 1);
    }
    CHECK(hamming(vector_switch_state(0), vector_switch_state(1)) == 1);
    CHECK(hamming(vector_switch_state(7), vector_switch_state(2)) == 1);
    CHECK_THROWS_AS(vector_switch_state(8), std::domain_error);
    CHECK_THROWS_AS(vector_switch_state(-1), std::domain_error);
}

TEST_CASE("sample counts and angles") {
    CHECK(samples_per_sector(Sequence::Csv) == 3);
    CHECK(samples_per_sector(Sequence::Abc1) == 2);
    CHECK(samples_per_sector(Sequence::Abc2) == 2);
    CHECK(samples_per_sector(Sequence::Svhe) == 2);
    CHECK(sample_angles_deg(Sequence::Csv) ==
          std::vector<double>{10.0, 30.0, 50.0});
    CHECK(sample_angles_deg(Sequence::Svhe) == std::vector<double>{15.0, 45.0});
    CHECK(sequence_uses_k(Sequence::Svhe));
    CHECK_FALSE(sequence_uses_k(Sequence::Csv));
}

TEST_CASE("playlist vector orders in sector 1") {
    const double m = 0.8, ts = 1e-3;
    CHECK(ids_of(subcycle_playlist(Sequence::Csv, 0, m, 0.5, ts)) ==
          std::vector<int>{0, 1, 2, 7});
    CHECK(ids_of(subcycle_playlist(Sequence::Csv, 1, m, 0.5, ts)) ==
          std::vector<int>{7, 2, 1, 0});
    CHECK(ids_of(subcycle_playlist(Sequence::Csv, 2, m, 0.5, ts)) ==
          std::vector<int>{0, 1, 2, 7});
    CHECK(ids_of(subcycle_playlist(Sequence::Abc1, 0, m, 0.5, ts)) ==
          std::vector<int>{0, 1, 2, 1});
    CHECK(ids_of(subcycle_playlist(Sequence::Abc1, 1, m, 0.5, ts)) ==
          std::vector<int>{1, 2, 1, 0});
    CHECK(ids_of(subcycle_playlist(Sequence::Abc2, 0, m, 0.5, ts)) ==
          std::vector<int>{7, 2, 1, 2});
    CHECK(ids_of(subcycle_playlist(Sequence::Abc2, 1, m, 0.5, ts)) ==
          std::vector<int>{2, 1, 2, 7});
    CHECK(ids_of(subcycle_playlist(Sequence::Svhe, 0, m, 0.3, ts)) ==
          std::vector<int>{0, 1, 2, 1});
    CHECK(ids_of(subcycle_playlist(Sequence::Svhe, 1, m, 0.3, ts)) ==
          std::vector<int>{7, 2, 1, 2});
}

TEST_CASE("playlist durations split the dwell times") {
    const double m = 0.8, ts = 1e-3, k = 0.3;

    const auto dw10 = dwell_times(m, 10.0, ts);
    const auto csv0 = subcycle_playlist(Sequence::Csv, 0, m, 0.5, ts);
    CHECK(csv0[0].seconds == doctest::Approx(0.5 * dw10.tz).epsilon(1e-12));
    CHECK(csv0[1].seconds == doctest::Approx(dw10.t1).epsilon(1e-12));
    CHECK(csv0[2].seconds == doctest::Approx(dw10.t2).epsilon(1e-12));
    CHECK(csv0[3].seconds == doctest::Approx(0.5 * dw10.tz).epsilon(1e-12));

    const auto dw15 = dwell_times(m, 15.0, ts);
    const auto sv0 = subcycle_playlist(Sequence::Svhe, 0, m, k, ts);
    CHECK(sv0[0].seconds == doctest::Approx(dw15.tz).epsilon(1e-12));
    CHECK(sv0[1].seconds == doctest::Approx(k * dw15.t1).epsilon(1e-12));
    CHECK(sv0[2].seconds == doctest::Approx(dw15.t2).epsilon(1e-12));
    CHECK(sv0[3].seconds ==
          doctest::Approx((1.0 - k) * dw15.t1).epsilon(1e-12));

    const auto dw45 = dwell_times(m, 45.0, ts);
    const auto sv1 = subcycle_playlist(Sequence::Svhe, 1, m, k, ts);
    CHECK(sv1[0].seconds == doctest::Approx(dw45.tz).epsilon(1e-12));
    CHECK(sv1[1].seconds ==
          doctest::Approx((1.0 - k) * dw45.t2).epsilon(1e-12));
    CHECK(sv1[2].seconds == doctest::Approx(dw45.t1).epsilon(1e-12));
    CHECK(sv1[3].seconds == doctest::Approx(k * dw45.t2).epsilon(1e-12));
}

TEST_CASE("playlist durations always tile the subcycle") {
    for (auto seq : {Sequence::Csv, Sequence::Abc1, Sequence::Abc2,
                     Sequence::Svhe}) {
        for (int i = 0; i < 50; ++i) {
            const double m = oracle::uniform(0.05, 1.0);
            const double k = oracle::uniform(0.01, 0.99);
            const double ts = oracle::uniform(1e-5, 1e-2);
            for (int s = 0; s < samples_per_sector(seq); ++s) {
                const auto slots = subcycle_playlist(seq, s, m, k, ts);
                CHECK(slots.size() == 4);
                double sum = 0.0;
                for (const auto& slot : slots) {
                    CHECK(slot.seconds >= -1e-15 * ts);
                    sum += slot.seconds;
                }
                CHECK(sum == doctest::Approx(ts).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("one leg switches between adjacent slots") {
    for (auto seq : {Sequence::Csv, Sequence::Abc1, Sequence::Abc2,
                     Sequence::Svhe}) {
        for (int s = 0; s < samples_per_sector(seq); ++s) {
            const auto slots = subcycle_playlist(seq, s, 0.8, 0.4, 1e-3);
            for (std::size_t i = 1; i < slots.size(); ++i)
                CHECK(hamming(vector_switch_state(slots[i - 1].vector_id),
                              vector_switch_state(slots[i].vector_id)) == 1);
        }
    }
}

TEST_CASE("zero-duration slots are kept at the hexagon boundary") {
    // At m=1 the 30-degree sample has no zero time.
    const auto slots = subcycle_playlist(Sequence::Csv, 1, 1.0, 0.5, 1e-3);
    CHECK(slots.size() == 4);
    CHECK(std::abs(slots.front().seconds) < 1e-18);
    CHECK(std::abs(slots.back().seconds) < 1e-18);
}

TEST_CASE("k is validated only where it matters") {
    CHECK_THROWS_AS(subcycle_playlist(Sequence::Svhe, 0, 0.8, 0.0, 1e-3),
                    std::domain_error);
    CHECK_THROWS_AS(subcycle_playlist(Sequence::Svhe, 0, 0.8, 1.0, 1e-3),
                    std::domain_error);
    CHECK_NOTHROW(subcycle_playlist(Sequence::Csv, 0, 0.8, 0.0, 1e-3));
    CHECK_THROWS_AS(subcycle_playlist(Sequence::Csv, 3, 0.8, 0.5, 1e-3),
                    std::domain_error);
}

TEST_CASE("sample plan covers the cycle in order") {
    DriveConfig drive;
    for (auto seq : {Sequence::Csv, Sequence::Svhe}) {
        const auto plan = sample_plan(seq, 0.8, drive);
        const int n = samples_per_sector(seq);
        CHECK(static_cast<int>(plan.size()) == 6 * n);
        const double ts = subcycle_seconds(seq, 0.8, drive);
        for (std::size_t i = 0; i < plan.size(); ++i) {
            CHECK(plan[i].sector == static_cast<int>(i) / n + 1);
            CHECK(plan[i].sample_index == static_cast<int>(i) % n);
            CHECK(plan[i].ts == doctest::Approx(ts).epsilon(1e-12));
        }
        // 6 n ts spans exactly one fundamental period
        CHECK(6 * n * ts == doctest::Approx(1.0 / (50.0 * 0.8)).epsilon(1e-12));
    }
}
