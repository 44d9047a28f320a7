#include <doctest.h>

#include <cmath>
#include <sstream>

#include "circleroots/io.hpp"

using namespace circleroots;
using namespace std::complex_literals;
namespace io = circleroots::io;

TEST_CASE("parse_complex") {
    CHECK(io::parse_complex("3") == Coeff{3.0});
    CHECK(io::parse_complex("-2.5") == Coeff{-2.5});
    CHECK(io::parse_complex("2i") == 2i);
    CHECK(io::parse_complex("-2i") == -2i);
    CHECK(io::parse_complex("i") == 1i);
    CHECK(io::parse_complex("-i") == -1i);
    CHECK(io::parse_complex("1+2i") == 1.0 + 2i);
    CHECK(io::parse_complex("1-i") == 1.0 - 1i);
    CHECK(io::parse_complex("1.5e-3-4i") == 1.5e-3 - 4i);
    CHECK(io::parse_complex(" 1 + 1i ") == 1.0 + 1i);
}

TEST_CASE("parse_complex errors carry a position") {
    for (const char* bad : {"", "x", "1+", "1i+2", "2i+3i", "1+2+3i", "1e999", "--1"}) {
        INFO(bad);
        CHECK_THROWS_AS(io::parse_complex(bad), io::ParseError);
    }
    try {
        io::parse_coefficients("1,,2");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        io::parse_coefficients("1,2,abc");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("parse_coefficients") {
    CHECK(io::parse_coefficients("1+1i,-2,0,-2i,1+1i") == Polynomial{1.0 + 1i, -2.0, 0.0, -2i, 1.0 + 1i});
    CHECK(io::parse_coefficients("1, 5, 1") == Polynomial{1.0, 5.0, 1.0});
}

TEST_CASE("polynomial JSON round trip") {
    const Polynomial h{1.0 + 1i, -2.0, 0.0, -2i, 1.0 + 1i};
    const auto j = io::to_json(h);
    CHECK(j["coeffs"].size() == 5);
    CHECK(io::polynomial_from_json(j) == h);
    CHECK(io::polynomial_from_json(io::Json::parse(j.dump())) == h);
    CHECK(io::polynomial_from_json(io::Json::parse(R"({"coeffs": [1, [0, 2], 3]})")) == Polynomial{1.0, 2i, 3.0});
    CHECK_THROWS_AS(io::polynomial_from_json(io::Json::parse(R"({"c": [1]})")), InvalidArgument);
    CHECK_THROWS_AS(io::polynomial_from_json(io::Json::parse(R"({"coeffs": [[1, 2, 3]]})")), InvalidArgument);
    CHECK_THROWS_AS(io::polynomial_from_json(io::Json::parse(R"({"coeffs": ["a"]})")), InvalidArgument);
}

TEST_CASE("report encodings") {
    const Polynomial p10{1.0, 10.0, 1.0, 10.0, 1.0};
    const auto pred = io::to_json(exact_count_criterion(p10, 1));
    CHECK(pred["kind"] == "ExactOnCircle");
    CHECK(pred["count"] == 2);
    CHECK(pred["l"] == 1);
    CHECK(pred["simple"] == true);

    const auto inv = io::to_json(detect(p10));
    CHECK(inv["self_inversive"] == true);

    const auto salem = io::to_json(is_salem(p10));
    CHECK(salem["salem"] == false);
    CHECK(salem["salem_number"].is_null());
    CHECK(salem["reasons"].is_array());

    const BetheSpec spec{6, 6, 2.5, std::nullopt};
    CHECK(io::bethe_spec_from_json(io::to_json(spec)).n == 6);
    CHECK(io::bethe_spec_from_json(io::to_json(spec)).delta == 2.5);
}

TEST_CASE("CSV encodings") {
    const auto cls = find_roots(Polynomial{-1.0, 0.0, 1.0});
    const std::string csv = io::roots_csv(cls);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "re,im,band");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 2);

    const std::vector<double> grid{0.5, 3.0};
    const auto table = io::sweep_csv(sweep(4, 4, grid));
    CHECK(table.rfind("delta,regime,inside,on,outside,simple,min_root_gap\n", 0) == 0);
    CHECK(table.find("0.5,AllOnCircleSimple,0,4,0,true,") != std::string::npos);
    CHECK(table.find("3,TwoOffCircle,1,2,1,true,") != std::string::npos);
}

TEST_CASE("format_double") {
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(io::format_double(3.0) == "3");
    CHECK(std::stod(io::format_double(0.1 + 0.2)) == 0.1 + 0.2);
}
