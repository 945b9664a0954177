#include <doctest.h>
#include <mmf/serialize.hpp>
#include <mmf/minimal.hpp>

using namespace mmf;

TEST_CASE("QSeries JSON round trip") {
    QSeries f = scaled_character(7, 2, 12);
    Json j = to_json(f);
    CHECK(j.contains("lattice_den"));
    CHECK(j.contains("lead"));
    CHECK(j.contains("coeffs"));
    CHECK(j.contains("exact"));
    QSeries back = qseries_from_json(j);
    CHECK(back == f);
    CHECK(to_json(back).dump() == j.dump());

    QSeries z = QSeries::zero();
    CHECK(qseries_from_json(to_json(z)).is_zero());
}

TEST_CASE("ModularFormExact JSON round trip") {
    ModularFormExact f;
    f.weight = 12;
    f.coords[{3, 0}] = rat(1, 1728);
    f.coords[{0, 2}] = rat(-1, 1728);
    Json j = to_json(f);
    ModularFormExact back = mform_from_json(j);
    CHECK(back == f);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("MLDE JSON round trip") {
    std::vector<QSeries> sols = {scaled_character(5, 1, 60), scaled_character(5, 2, 60)};
    MLDE L = fit_mlde(rat(1, 5), sols, 2);
    Json j = to_json(L);
    CHECK(j["weight"] == "1/5");
    CHECK(j["order"] == 2);
    MLDE back = mlde_from_json(j);
    CHECK(back.weight == L.weight);
    CHECK(back.order == L.order);
    CHECK(back.coeffs == L.coeffs);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("JSON output is byte-stable") {
    QSeries f = scaled_character(5, 1, 10);
    CHECK(to_json(f).dump() == to_json(scaled_character(5, 1, 10)).dump());
}

TEST_CASE("TransformReport JSON shape") {
    TransformReport r{5, "S2", 1e-12, 1e-10, true};
    Json j = to_json(r);
    CHECK(j["p"] == 5);
    CHECK(j["relation"] == "S2");
    CHECK(j["pass"] == true);
    CHECK(j["tol"] == 1e-10);
}
