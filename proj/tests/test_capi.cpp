#include <doctest.h>

#include "flagmaps/flagmaps.h"

#include <cstdlib>
#include <string>
#include <vector>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    fm_string_free(s);
    return out;
}

struct Group {
    fm_group* g = nullptr;
    explicit Group(const char* tag) { REQUIRE(fm_group_from_tag(tag, &g) == FM_OK); }
    ~Group() { fm_group_free(g); }
};

} // namespace

TEST_CASE("version and limits")
{
    CHECK(std::string(fm_version()).size() > 0);
    fm_limits lim;
    fm_limits_default(&lim);
    CHECK(lim.max_terms == 10'000'000);
    CHECK(lim.max_n == 64);
}

TEST_CASE("groups")
{
    Group a2("A2");
    size_t r = 0;
    CHECK(fm_group_rank(a2.g, &r) == FM_OK);
    CHECK(r == 2);
    CHECK(fm_group_positive_root_count(a2.g, &r) == FM_OK);
    CHECK(r == 3);
    char* label = nullptr;
    CHECK(fm_group_label(a2.g, &label) == FM_OK);
    CHECK(take(label) == "A2");

    fm_group* bad = nullptr;
    CHECK(fm_group_from_tag("D2", &bad) == FM_INPUT_ERROR);
    CHECK(bad == nullptr);
    CHECK(std::string(fm_last_error()).size() > 0);
    CHECK(fm_group_from_tag(nullptr, &bad) == FM_INPUT_ERROR);

    fm_group* g2 = nullptr;
    CHECK(fm_group_from_json("[[2,-1],[-3,2]]", &g2) == FM_OK);
    CHECK(fm_group_positive_root_count(g2, &r) == FM_OK);
    CHECK(r == 6);
    fm_group_free(g2);
    fm_group_free(nullptr);
}

TEST_CASE("polynomials through the C API")
{
    fm_poly* p = nullptr;
    REQUIRE(fm_poly_parse("w1 + rho", 1, &p) == FM_OK);
    fm_poly* sq = nullptr;
    REQUIRE(fm_poly_mul(p, p, &sq) == FM_OK);
    char* s = nullptr;
    CHECK(fm_poly_render(sq, &s) == FM_OK);
    CHECK(take(s) == "w1^2 + rho^2 + 2");
    CHECK(fm_poly_evaluate_at_one(sq, &s) == FM_OK);
    CHECK(take(s) == "4");
    size_t n = 0;
    CHECK(fm_poly_term_count(sq, &n) == FM_OK);
    CHECK(n == 3);
    fm_poly* sum = nullptr;
    REQUIRE(fm_poly_add(p, p, &sum) == FM_OK);
    CHECK(fm_poly_render(sum, &s) == FM_OK);
    CHECK(take(s) == "2*w1 + 2*rho");
    int eq = -1;
    CHECK(fm_poly_equal(p, p, &eq) == FM_OK);
    CHECK(eq == 1);
    CHECK(fm_poly_equal(p, sq, &eq) == FM_OK);
    CHECK(eq == 0);

    fm_poly* other = nullptr;
    REQUIRE(fm_poly_parse("w2", 2, &other) == FM_OK);
    fm_poly* bad = nullptr;
    CHECK(fm_poly_add(p, other, &bad) == FM_INPUT_ERROR);
    CHECK(fm_poly_parse("w1 +", 1, &bad) == FM_INPUT_ERROR);
    CHECK(fm_poly_render(nullptr, &s) == FM_INPUT_ERROR);
    fm_poly_free(other);
    fm_poly_free(sum);
    fm_poly_free(sq);
    fm_poly_free(p);
}

TEST_CASE("characters and dimensions")
{
    Group a2("A2");
    int64_t lam[] = {1, 1};
    char* s = nullptr;
    CHECK(fm_dimension(a2.g, lam, 2, &s) == FM_OK);
    CHECK(take(s) == "8");
    fm_poly* chi = nullptr;
    REQUIRE(fm_character(a2.g, lam, 2, nullptr, &chi) == FM_OK);
    CHECK(fm_poly_evaluate_at_one(chi, &s) == FM_OK);
    CHECK(take(s) == "8");
    fm_poly_free(chi);

    fm_limits lim;
    fm_limits_default(&lim);
    lim.max_terms = 3;
    int64_t big[] = {4, 4};
    CHECK(fm_character(a2.g, big, 2, &lim, &chi) == FM_RESOURCE_ERROR);
    int64_t neg[] = {-1, 0};
    CHECK(fm_character(a2.g, neg, 2, nullptr, &chi) == FM_INPUT_ERROR);
    CHECK(fm_dimension(a2.g, lam, 1, &s) == FM_INPUT_ERROR);
}

TEST_CASE("decisions")
{
    Group a1("A1");
    fm_decision* d = nullptr;
    REQUIRE(fm_realize(a1.g, "[[2]]", nullptr, &d) == FM_OK);
    CHECK(fm_decision_status(d) == FM_NOT_CERTIFIED);
    char* s = nullptr;
    CHECK(fm_decision_render(d, FM_FORMAT_TEXT, &s) == FM_OK);
    CHECK(take(s) == "not certified by this criterion: negative coefficient -1 at weight (0)\n");
    fm_decision_free(d);

    REQUIRE(fm_realize(a1.g, R"({"group":"A1","rows":[[1]]})", nullptr, &d) == FM_OK);
    CHECK(fm_decision_status(d) == FM_OK);
    CHECK(fm_decision_render(d, FM_FORMAT_JSON, &s) == FM_OK);
    CHECK(take(s) == "{\"summands\":[{\"lambda\":[1],\"mult\":1}],\"dim\":2}\n");
    fm_decision_free(d);

    CHECK(fm_realize(a1.g, R"({"group":"A2","rows":[[1,0],[0,1]]})", nullptr, &d) == FM_INPUT_ERROR);

    fm_poly* p = nullptr;
    REQUIRE(fm_poly_parse("w1 + rho + 1", 1, &p) == FM_OK);
    REQUIRE(fm_is_in_omega_n(a1.g, p, 3, nullptr, &d) == FM_OK);
    CHECK(fm_decision_status(d) == FM_OK);
    fm_decision_free(d);
    REQUIRE(fm_is_in_omega_n(a1.g, p, 4, nullptr, &d) == FM_OK);
    CHECK(fm_decision_status(d) == FM_NOT_CERTIFIED);
    fm_decision_free(d);
    REQUIRE(fm_decompose(a1.g, p, nullptr, &d) == FM_OK);
    CHECK(fm_decision_status(d) == FM_OK);
    fm_decision_free(d);
    fm_poly_free(p);
}

TEST_CASE("pipeline entry points")
{
    fm_poly* s = nullptr;
    REQUIRE(fm_smap(R"({"rows":[[1,0],[-1,1]]})", &s) == FM_OK);
    char* text = nullptr;
    CHECK(fm_poly_render(s, &text) == FM_OK);
    CHECK(take(text) == "w1*rho + w1 + w2^2*rho");
    fm_poly_free(s);

    Group a1("A1");
    int holds = -1;
    char* chr = nullptr;
    char* sm = nullptr;
    CHECK(fm_verify_theorem(a1.g, "[[2],[0],[-2]]", &holds, &chr, &sm) == FM_OK);
    CHECK(holds == 1);
    CHECK(take(chr) == take(sm));
    CHECK(fm_verify_theorem(a1.g, "[[2],[0]]", &holds, &chr, &sm) == FM_INPUT_ERROR);
}

TEST_CASE("type A entry points")
{
    fm_ypoly* q = nullptr;
    REQUIRE(fm_schur("1,1", 3, &q) == FM_OK);
    char* s = nullptr;
    CHECK(fm_ypoly_render(q, &s) == FM_OK);
    CHECK(take(s) == "y1*y2 + y1*y3 + y2*y3");
    fm_poly* back = nullptr;
    REQUIRE(fm_alpha_inverse(q, &back) == FM_OK);
    Group a2("A2");
    fm_ypoly* q2 = nullptr;
    REQUIRE(fm_alpha(a2.g, back, &q2) == FM_OK);
    CHECK(fm_ypoly_render(q2, &s) == FM_OK);
    CHECK(take(s) == "y1*y2 + y1*y3 + y2*y3");
    Group b2("B2");
    fm_ypoly* q3 = nullptr;
    CHECK(fm_alpha(b2.g, back, &q3) == FM_INPUT_ERROR);
    fm_ypoly_free(q2);
    fm_poly_free(back);
    fm_ypoly_free(q);

    CHECK(fm_schur_dim("2,1", 3, &s) == FM_OK);
    CHECK(take(s) == "8");
    CHECK(fm_schur("1,2", 3, &q) == FM_INPUT_ERROR);

    CHECK(fm_schur_flag_map("1,1", 3, FM_FORMAT_TEXT, &s) == FM_OK);
    auto report = take(s);
    CHECK(report.find("n: 3\n") == 0);
    CHECK(report.find("check: pass") != std::string::npos);
    CHECK(fm_schur_flag_map("1,1", 2, FM_FORMAT_TEXT, &s) == FM_INPUT_ERROR);
}

TEST_CASE("omega enumeration through a callback")
{
    Group a2("A2");
    std::vector<std::string> lines;
    auto visit = [](const char* line, void* user) -> int {
        static_cast<std::vector<std::string>*>(user)->push_back(line);
        return 1;
    };
    CHECK(fm_omega_enumerate(a2.g, 3, nullptr, FM_FORMAT_TEXT, visit, &lines) == FM_OK);
    CHECK(lines == std::vector<std::string>{"(1,0)", "(0,1)", "3*(0,0)"});
    CHECK(fm_omega_enumerate(a2.g, 0, nullptr, FM_FORMAT_TEXT, visit, &lines) == FM_INPUT_ERROR);
    CHECK(fm_omega_enumerate(a2.g, 1000, nullptr, FM_FORMAT_TEXT, visit, &lines) == FM_RESOURCE_ERROR);
}
