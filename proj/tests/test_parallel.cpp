#include <doctest.h>

#include <atomic>
#include <random>

#include "hovm/hovm.hpp"
#include "hovm/oracle.hpp"
#include "hovm/resolutions.hpp"
#include "hovm/verify.hpp"

using namespace hovm;

TEST_CASE("parallel_for covers every index once and rethrows") {
    std::vector<std::atomic<int>> hits(5000);
    parallel_for(hits.size(), Exec::parallel, [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(100, Exec::parallel, [](std::size_t i) {
                        if (i == 37) throw ValidationError("boom");
                    }),
                    ValidationError);
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        HovmSpec spec = random_sl2n_instance(rng, 2, 4).spec();
        CHECK(weight_set(spec, 9, Exec::serial) == weight_set(spec, 9, Exec::parallel));
        CHECK(weight_set_via_T2(spec, 9, Exec::serial) == weight_set_via_T2(spec, 9, Exec::parallel));
        CHECK(psi_k(spec, 1, 9, Exec::serial) == psi_k(spec, 1, 9, Exec::parallel));
        CHECK(inclusion_exclusion_char(spec, 9, Exec::serial) == inclusion_exclusion_char(spec, 9, Exec::parallel));
    }
    for (const char* name : {"A3", "B3"}) {
        Gcm g = parse_gcm(name);
        for (int t = 0; t < 5; ++t) {
            HovmSpec spec = random_orthogonal_instance(rng, g, 2).spec();
            CHECK(weight_set(spec, 7, Exec::serial) == weight_set(spec, 7, Exec::parallel));
            CHECK(verify_complex(koszul_resolution(spec), Exec::serial) ==
                  verify_complex(koszul_resolution(spec), Exec::parallel));
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    Gcm g = parse_gcm("A4");
    HovmSpec spec = make_spec(g, make_weight(g, {1, 0, 0, -1}), {NodeSet::of({1}), NodeSet::of({0, 2})});
    set_threads(1);
    auto one = weight_set(spec, 9);
    set_threads(4);
    auto four = weight_set(spec, 9);
    set_threads(0);
    CHECK(one == four);
}
