#include <doctest.h>

#include <sstream>

#include "adjkit/io.hpp"
#include "adjkit/verify.hpp"

using namespace adjkit;

TEST_CASE("JSON float document") {
    std::istringstream in(
        R"({"mode":"float","rows":2,"cols":2,"entries":[[1,0],[2,0],[3,0],[4,0]]})");
    const AnyMatrix m = parse_matrix_file(in);
    REQUIRE(!is_exact(m));
    const FloatMatrix& a = std::get<FloatMatrix>(m);
    CHECK(a(0, 0) == Complex(1, 0));
    CHECK(a(0, 1) == Complex(2, 0));
    CHECK(a(1, 0) == Complex(3, 0));
    CHECK(a(1, 1) == Complex(4, 0));
}

TEST_CASE("JSON exact document") {
    std::istringstream in(
        R"({"mode":"exact","rows":1,"cols":2,"entries":["1/2","-3+2/5i"]})");
    const AnyMatrix m = parse_matrix_file(in);
    REQUIRE(is_exact(m));
    const ExactMatrix& a = std::get<ExactMatrix>(m);
    CHECK(a(0, 0) == RationalComplex(mpq_class(1, 2)));
    CHECK(a(0, 1) == RationalComplex(mpq_class(-3), mpq_class(2, 5)));
}

TEST_CASE("shape and parse errors") {
    std::istringstream three_entries(
        R"({"mode":"float","rows":2,"cols":2,"entries":[[1,0],[2,0],[3,0]]})");
    CHECK_THROWS_AS(parse_matrix_file(three_entries), ShapeError);

    std::istringstream bad_mode(R"({"mode":"interval","rows":1,"cols":1,"entries":["1"]})");
    CHECK_THROWS_AS(parse_matrix_file(bad_mode), ParseError);

    std::istringstream not_json("{\"mode\": ");
    CHECK_THROWS_AS(parse_matrix_file(not_json), ParseError);

    std::istringstream empty("   ");
    CHECK_THROWS_AS(parse_matrix_file(empty), ParseError);

    std::istringstream bad_scalar(R"({"mode":"exact","rows":1,"cols":1,"entries":["1/0"]})");
    CHECK_THROWS_AS(parse_matrix_file(bad_scalar), ParseError);

    std::istringstream nan_entry(R"({"mode":"float","rows":1,"cols":1,"entries":["nan"]})");
    CHECK_THROWS_AS(parse_matrix_file(nan_entry), ParseError);
}

TEST_CASE("text documents") {
    std::istringstream real_text("2 2\n1 2\n3 4\n");
    const AnyMatrix m = parse_matrix_file(real_text);
    REQUIRE(!is_exact(m));
    CHECK(std::get<FloatMatrix>(m)(1, 0) == Complex(3, 0));

    std::istringstream complex_text("1 2\n1+2i -3.5i\n");
    const AnyMatrix cm = parse_matrix_file(complex_text);
    const FloatMatrix& c = std::get<FloatMatrix>(cm);
    CHECK(c(0, 0) == Complex(1, 2));
    CHECK(c(0, 1) == Complex(0, -3.5));

    std::istringstream exact_text("1 2\n1/2 -2/3+1/7i\n");
    const AnyMatrix e = parse_matrix_file(exact_text);
    REQUIRE(is_exact(e));

    std::istringstream bad_count("2 2\n1 2 3\n");
    CHECK_THROWS_AS(parse_matrix_file(bad_count), ShapeError);
}

TEST_CASE("round trip: parse -> serialize -> parse is the identity") {
    const char* documents[] = {
        R"({"mode":"exact","rows":2,"cols":2,"entries":["1/2","-3","0","5/7+1/3i"]})",
        R"({"mode":"float","rows":2,"cols":2,"entries":[[1.5,-2.25],[0,1e-3],[3,0],[-4.125,0.875]]})",
    };
    for (const char* doc : documents) {
        std::istringstream in(doc);
        const AnyMatrix m = parse_matrix_file(in);

        std::istringstream again(serialize_matrix_json(m));
        const AnyMatrix m2 = parse_matrix_file(again);
        REQUIRE(is_exact(m) == is_exact(m2));
        if (is_exact(m)) {
            CHECK(std::get<ExactMatrix>(m) == std::get<ExactMatrix>(m2));
        } else {
            CHECK(std::get<FloatMatrix>(m) == std::get<FloatMatrix>(m2));
        }

        std::istringstream text_again(serialize_matrix_text(m));
        const AnyMatrix m3 = parse_matrix_file(text_again);
        REQUIRE(is_exact(m) == is_exact(m3));
        if (is_exact(m)) {
            CHECK(std::get<ExactMatrix>(m) == std::get<ExactMatrix>(m3));
        } else {
            CHECK(std::get<FloatMatrix>(m) == std::get<FloatMatrix>(m3));
        }
    }
}

TEST_CASE("scalar literal grammar") {
    CHECK(parse_rational_complex("i") == RationalComplex(mpq_class(0), mpq_class(1)));
    CHECK(parse_rational_complex("-i") == RationalComplex(mpq_class(0), mpq_class(-1)));
    CHECK(parse_rational_complex("3-2i") == RationalComplex(mpq_class(3), mpq_class(-2)));
    CHECK(parse_rational_complex("-1/2+3/4i") ==
          RationalComplex(mpq_class(-1, 2), mpq_class(3, 4)));
    CHECK(parse_rational_complex(" 2 / 4 ") == RationalComplex(mpq_class(1, 2)));
    CHECK_THROWS_AS(parse_rational_complex("1+2"), ParseError);
    CHECK_THROWS_AS(parse_rational_complex("2i+1i"), ParseError);
    CHECK_THROWS_AS(parse_rational_complex("1.5"), ParseError);

    CHECK(parse_float_complex("2.5e-3+1e2i") == Complex(2.5e-3, 100.0));
    CHECK(parse_float_complex("-.5i") == Complex(0, -0.5));
    CHECK_THROWS_AS(parse_float_complex("inf"), DomainError);
    CHECK_THROWS_AS(parse_float_complex("abc"), ParseError);
}

TEST_CASE("run_verify passes clean and fails corrupted") {
    VerifyOptions opts;
    opts.trials = 2;
    opts.dim_max = 4;
    const VerifyReport clean = run_verify(opts);
    CHECK(clean.pass());
    for (const auto& ident : clean.identities) {
        INFO(ident.name, " residual ", ident.max_residual);
        CHECK(ident.pass);
    }

    opts.corrupt = true;
    const VerifyReport corrupted = run_verify(opts);
    CHECK(!corrupted.pass());
}

TEST_CASE("run_verify_on a single exact matrix") {
    std::istringstream in(
        R"({"mode":"exact","rows":2,"cols":2,"entries":["1","2","3","4"]})");
    const AnyMatrix m = parse_matrix_file(in);
    VerifyOptions opts;
    const VerifyReport rep = run_verify_on(m, opts);
    CHECK(rep.pass());
    for (const auto& ident : rep.identities) CHECK(ident.max_residual == 0.0);

    opts.corrupt = true;
    CHECK(!run_verify_on(m, opts).pass());
}
