#include <catch2/catch_amalgamated.hpp>

#include "liecheck/algebra_file.hpp"
#include "liecheck/verification.hpp"

using namespace liecheck;

TEST_CASE("built-in model encodes the bracket table") {
  using namespace builtin;
  Model m = builtin_model();
  CHECK(m.algebra.at(b, z, z) == Rational(2));        // [b,z] = 2z
  CHECK(m.algebra.at(x2, x3, z) == Rational(-3));     // [x2,x3] = -3z
  CHECK(m.algebra.at(x1, x4, z) == Rational(1));      // [x1,x4] = z
  CHECK(m.algebra.at(f, e, h) == Rational(1));        // [f,e] = h
  for (std::size_t k = 0; k < 9; ++k) CHECK(m.algebra.at(x1, x2, k) == 0);  // unlisted
  CHECK_FALSE(m.algebra.antisymmetry_violation().has_value());
}

TEST_CASE("serialize and reparse reproduces the structure constants") {
  Model m = builtin_model();
  Json j = serialize_model(m);
  Model back = parse_model(j);
  CHECK(back.algebra.c == m.algebra.c);
  CHECK(back.algebra.labels == m.algebra.labels);
  CHECK(back.name == m.name);
  REQUIRE(back.subalgebra.has_value());
  CHECK(*back.subalgebra == *m.subalgebra);
  REQUIRE(back.complement.has_value());
  CHECK(*back.complement == *m.complement);
  REQUIRE(back.acs.has_value());
  CHECK(*back.acs == *m.acs);
}

TEST_CASE("rationals in files stay exact") {
  Json j{{"name", "halves"},
         {"dim", 2},
         {"brackets", Json::array({Json{{"i", 0}, {"j", 1}, {"coeffs", {{"0", "1/2"}}}}})}};
  Model m = parse_model(j);
  CHECK(m.algebra.at(0, 1, 0) == Rational(1, 2));
  CHECK(m.algebra.at(1, 0, 0) == Rational(-1, 2));  // antisymmetric completion
}

TEST_CASE("malformed inputs are rejected with a field path") {
  auto entry = [](Json e) {
    return Json{{"name", "bad"}, {"dim", 3},
                {"brackets", Json::array({std::move(e)})}};
  };

  // i = j
  CHECK_THROWS_AS(parse_model(entry(Json{{"i", 1}, {"j", 1}, {"coeffs", {{"0", "1"}}}})),
                  ParseError);
  // index out of range
  CHECK_THROWS_AS(parse_model(entry(Json{{"i", 0}, {"j", 3}, {"coeffs", {{"0", "1"}}}})),
                  ParseError);
  CHECK_THROWS_AS(parse_model(entry(Json{{"i", 0}, {"j", 1}, {"coeffs", {{"7", "1"}}}})),
                  ParseError);
  // malformed rational and non-string rational
  CHECK_THROWS_AS(parse_model(entry(Json{{"i", 0}, {"j", 1}, {"coeffs", {{"0", "1.5"}}}})),
                  ParseError);
  CHECK_THROWS_AS(parse_model(entry(Json{{"i", 0}, {"j", 1}, {"coeffs", {{"0", 2}}}})),
                  ParseError);

  // duplicates, both orders
  Json dup{{"name", "dup"}, {"dim", 3},
           {"brackets", Json::array({Json{{"i", 0}, {"j", 1}, {"coeffs", {{"0", "1"}}}},
                                     Json{{"i", 1}, {"j", 0}, {"coeffs", {{"0", "1"}}}}})}};
  CHECK_THROWS_AS(parse_model(dup), ParseError);

  // acs without complement
  Json acs{{"name", "acs"}, {"dim", 2}, {"brackets", Json::array()},
           {"acs", Json::array({Json::array({"0", "-1"}), Json::array({"1", "0"})})}};
  CHECK_THROWS_AS(parse_model(acs), ParseError);

  CHECK_THROWS_AS(parse_model(Json{{"dim", 0}}), ParseError);
  CHECK_THROWS_AS(load_model("/nonexistent/path.json"), ParseError);
}

TEST_CASE("verification report has the documented shape") {
  VerificationReport report = run_full_verification(builtin_model());
  Json j = report.to_json();

  CHECK(j["tool"] == "liecheck");
  CHECK(j["format_version"] == 1);
  CHECK(j["model"] == "builtin");
  CHECK(j["seed"].is_number_unsigned());
  REQUIRE(j["checks"].is_array());
  for (const Json& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("claim"));
    REQUIRE(c.contains("verdict"));
    std::string v = c["verdict"].get<std::string>();
    CHECK((v == "pass" || v == "fail" || v == "unverifiable"));
    CHECK(c.contains("witness"));
  }
  CHECK(j["counts"]["pass"].get<std::size_t>() == report.count("pass"));
  CHECK(j["counts"]["fail"].get<std::size_t>() == report.count("fail"));
  CHECK(j["counts"]["unverifiable"].get<std::size_t>() == report.count("unverifiable"));
  CHECK(j["overall"] == (report.all_passed() ? "pass" : "fail"));

  // No JSON number anywhere carries a rational value: rationals are strings.
  // (Counts and dimensions are integers by design.)
  std::function<void(const Json&)> walk = [&](const Json& node) {
    if (node.is_number_float()) FAIL("found a floating-point number in the report");
    if (node.is_object())
      for (const auto& [k, v] : node.items()) walk(v);
    else if (node.is_array())
      for (const Json& v : node) walk(v);
  };
  walk(j);
}

TEST_CASE("verification runs are deterministic") {
  Json a = run_full_verification(builtin_model()).to_json();
  Json b = run_full_verification(builtin_model()).to_json();
  CHECK(a.dump() == b.dump());
  CHECK(run_full_verification(builtin_model()).to_text() ==
        run_full_verification(builtin_model()).to_text());
}

TEST_CASE("tampering with one bracket is pinpointed by the jacobi check") {
  Model m = builtin_model();
  // [x2,x3] = -2z instead of -3z breaks the sl2-invariance of the pairing.
  m.algebra.at(builtin::x2, builtin::x3, builtin::z) = Rational(-2);
  m.algebra.at(builtin::x3, builtin::x2, builtin::z) = Rational(2);
  m.name = "tampered";
  VerificationReport report = run_full_verification(m);
  REQUIRE_FALSE(report.all_passed());
  REQUIRE_FALSE(report.checks.empty());
  CHECK(report.checks[0].id == "jacobi");
  CHECK(report.checks[0].verdict == "fail");
  CHECK(report.checks[0].witness["defect_count"].get<std::size_t>() > 0);
}

TEST_CASE("a flat model with trivial isotropy verifies cleanly") {
  Model m;
  m.name = "flat6";
  m.algebra = LieAlgebra(6);
  m.complement = QMat::identity(6);
  QMat j(6, 6);
  j(1, 0) = 1, j(0, 1) = -1;
  j(3, 2) = 1, j(2, 3) = -1;
  j(5, 4) = 1, j(4, 5) = -1;
  m.acs = j;
  VerificationReport report = run_full_verification(m);
  CHECK(report.all_passed());
  for (const Check& c : report.checks)
    if (c.id == "nijenhuis") CHECK(c.witness["rank"].get<std::size_t>() == 0);
}
