#include <doctest.h>

#include "quaddyn/audit.hpp"

using namespace quaddyn;

TEST_CASE("delta certificate verifies at default precision") {
    Certificate c = delta_certificate();
    CHECK(c.verified);
    CHECK(c.claimed.certainly_gt(constants_table().at("delta")));
    // the first trace step encloses log(2001/2000)/16 above 3.12e-5
    bool found = false;
    for (auto& [what, iv] : c.trace)
        if (what.find("log(2001/2000)") != std::string::npos) {
            CHECK(iv.certainly_gt(ratq(312, 10000000)));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("delta certificate fails at 8 bits and is monotone in precision") {
    CHECK(!delta_certificate(8).verified);
    CHECK(delta_certificate(256).verified);
    CHECK(delta_certificate(512).verified);
    CHECK(delta_certificate(4096).verified);
}

TEST_CASE("B certificate verifies both branches") {
    Certificate c = b_certificate();
    CHECK(c.verified);
    Int b82;
    mpz_ui_pow_ui(b82.get_mpz_t(), 10, 82);
    CHECK(c.claimed.certainly_lt(Rat(b82)));
    bool large_branch = false, final_bound = false;
    for (auto& [what, iv] : c.trace) {
        if (what.find("281856") != std::string::npos || what.find("N-1 < 4 C") != std::string::npos) {
            CHECK(iv.certainly_lt(Rat(281856)));
            large_branch = true;
        }
        if (what.find("final bound") != std::string::npos) final_bound = true;
    }
    CHECK(large_branch);
    CHECK(final_bound);
    CHECK(b_certificate(512).verified);
}

TEST_CASE("constants table") {
    const auto& t = constants_table();
    CHECK(t.at("alpha1") == ratq(1, 192));
    CHECK(t.at("C1") == ratq(3, 17));
    CHECK(t.at("alpha2") == ratq(1, 2));
    CHECK(t.at("C2") == ratq(5, 2));
    CHECK(t.at("L_arch") == Rat(1000));
    Int d75;
    mpz_ui_pow_ui(d75.get_mpz_t(), 10, 75);
    CHECK(t.at("delta") == ratq(1, d75));
    CHECK(t.at("N_large_height") == Rat(281857));
    // re-derived threshold stays within the rounded value used in the text
    CHECK(4 * (t.at("C1") + t.at("alpha1")) / t.at("alpha1") <= t.at("h_threshold") + 1);
}
