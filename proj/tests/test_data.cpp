#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "bgclust/data.hpp"
#include "bgclust/errors.hpp"
#include "bgclust/manifest.hpp"
#include "bgclust/rng.hpp"
#include "test_util.hpp"

using namespace bgclust;
using testutil::contains;
using testutil::ScratchDir;
using testutil::thrown_message;

TEST_CASE("load_csv splits off the label column") {
    ScratchDir tmp("csv_labels");
    const std::string path = tmp.file("small.csv");
    testutil::spit(path, "a,b,label\n1,2,0\n3,4,1\n5,6,0\n");

    const DataMatrix m = load_csv(path, std::string("label"));
    CHECK(m.rows == 3);
    CHECK(m.cols == 2);
    CHECK(m.has_labels());
    CHECK(m.labels == std::vector<int>{0, 1, 0});
    CHECK(m.at(0, 0) == 1.0);
    CHECK(m.at(2, 1) == 6.0);
    CHECK(m.col_names == std::vector<std::string>{"a", "b"});
    CHECK(m.name == "small");
}

TEST_CASE("load_csv without a label column keeps every column as a feature") {
    ScratchDir tmp("csv_nolabel");
    const std::string path = tmp.file("small.csv");
    testutil::spit(path, "a,b,label\n1,2,0\n3,4,1\n5,6,0\n");

    const DataMatrix m = load_csv(path);
    CHECK(m.rows == 3);
    CHECK(m.cols == 3);
    CHECK_FALSE(m.has_labels());
    CHECK(m.at(1, 2) == 1.0);
}

TEST_CASE("load_csv failure modes name the file, row, and column") {
    ScratchDir tmp("csv_errors");

    SUBCASE("missing file") {
        const std::string msg =
            thrown_message<DataError>([&] { (void)load_csv(tmp.file("absent.csv")); });
        CHECK(contains(msg, "absent.csv"));
    }
    SUBCASE("unparsable cell names its row and column") {
        const std::string path = tmp.file("bad.csv");
        testutil::spit(path, "a,b\n1,2\n3,abc\n");
        const std::string msg = thrown_message<DataError>([&] { (void)load_csv(path); });
        CHECK(contains(msg, "row 2"));
        CHECK(contains(msg, "'b'"));
        CHECK(contains(msg, "abc"));
    }
    SUBCASE("ragged row") {
        const std::string path = tmp.file("ragged.csv");
        testutil::spit(path, "a,b\n1,2\n3\n");
        const std::string msg = thrown_message<DataError>([&] { (void)load_csv(path); });
        CHECK(contains(msg, "row 2"));
        CHECK(contains(msg, "expected 2"));
    }
    SUBCASE("label column not present") {
        const std::string path = tmp.file("nolab.csv");
        testutil::spit(path, "a,b\n1,2\n");
        const std::string msg = thrown_message<DataError>(
            [&] { (void)load_csv(path, std::string("label")); });
        CHECK(contains(msg, "label column 'label' not found"));
        CHECK(contains(msg, "nolab.csv"));
    }
    SUBCASE("negative label rejected") {
        const std::string path = tmp.file("neg.csv");
        testutil::spit(path, "a,label\n1,-1\n");
        const std::string msg = thrown_message<DataError>(
            [&] { (void)load_csv(path, std::string("label")); });
        CHECK(contains(msg, "nonnegative integer"));
    }
    SUBCASE("fractional label rejected") {
        const std::string path = tmp.file("frac.csv");
        testutil::spit(path, "a,label\n1,0.5\n");
        const std::string msg = thrown_message<DataError>(
            [&] { (void)load_csv(path, std::string("label")); });
        CHECK(contains(msg, "nonnegative integer"));
    }
    SUBCASE("only a label column leaves no features") {
        const std::string path = tmp.file("onlylab.csv");
        testutil::spit(path, "label\n0\n");
        const std::string msg = thrown_message<DataError>(
            [&] { (void)load_csv(path, std::string("label")); });
        CHECK(contains(msg, "no feature columns"));
    }
    SUBCASE("empty file") {
        const std::string path = tmp.file("empty.csv");
        testutil::spit(path, "");
        const std::string msg = thrown_message<DataError>([&] { (void)load_csv(path); });
        CHECK(contains(msg, "header"));
    }
    SUBCASE("header only") {
        const std::string path = tmp.file("headonly.csv");
        testutil::spit(path, "a,b\n");
        const std::string msg = thrown_message<DataError>([&] { (void)load_csv(path); });
        CHECK(contains(msg, "no data rows"));
    }
    SUBCASE("non-finite cell rejected") {
        const std::string path = tmp.file("inf.csv");
        testutil::spit(path, "a\ninf\n");
        const std::string msg = thrown_message<DataError>([&] { (void)load_csv(path); });
        CHECK(contains(msg, "finite"));
    }
}

TEST_CASE("load_csv skips blank lines") {
    ScratchDir tmp("csv_blank");
    const std::string path = tmp.file("blank.csv");
    testutil::spit(path, "a,b\n1,2\n\n3,4\n\n");
    const DataMatrix m = load_csv(path);
    CHECK(m.rows == 2);
    CHECK(m.at(1, 0) == 3.0);
}

TEST_CASE("csv write/load round-trips values and labels exactly") {
    ScratchDir tmp("csv_roundtrip");
    DataMatrix m = make_matrix(7, 3, "roundtrip");
    Rng rng(99);
    for (auto& v : m.values) v = rng.normal(0.0, 1.0) * std::pow(10.0, rng.uniform(-20, 20));
    m.values[0] = 0.0;
    m.values[1] = -0.0;
    m.values[2] = 1e-300;
    m.values[3] = std::numeric_limits<double>::denorm_min();
    m.values[4] = 0.1;
    m.labels = {0, 1, 2, 3, 4, 5, 6};
    m.col_names = {"x", "y", "z"};

    const std::string path = tmp.file("roundtrip.csv");
    write_csv(m, path);
    const DataMatrix back = load_csv(path, std::string("label"));

    REQUIRE(back.rows == m.rows);
    REQUIRE(back.cols == m.cols);
    CHECK(back.labels == m.labels);
    CHECK(back.col_names == m.col_names);
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        CHECK(back.values[i] == m.values[i]);  // shortest round-trip text is exact
    }
}

TEST_CASE("write_csv invents column names and appends the label header") {
    ScratchDir tmp("csv_names");
    DataMatrix m = make_matrix(2, 2);
    m.values = {1, 2, 3, 4};
    m.labels = {1, 0};
    const std::string path = tmp.file("named.csv");
    write_csv(m, path);
    const std::string text = testutil::slurp(path);
    CHECK(contains(text, "x0,x1,label\n"));
    const DataMatrix back = load_csv(path, std::string("label"));
    CHECK(back.labels == std::vector<int>{1, 0});
}

TEST_CASE("format_double emits shortest text that parses back exactly") {
    Rng rng(123);
    for (int i = 0; i < 2000; ++i) {
        const double v = rng.normal(0.0, 1.0) * std::pow(10.0, rng.uniform(-30, 30));
        const std::string text = format_double(v);
        char* end = nullptr;
        const double back = std::strtod(text.c_str(), &end);
        CHECK(back == v);
        CHECK(*end == '\0');
    }
    CHECK(format_double(0.125) == "0.125");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
}

TEST_CASE("content_hash reacts to any change and ignores nothing") {
    DataMatrix a = testutil::random_matrix(5, 3, -2.0, 2.0, 7);
    DataMatrix b = a;
    CHECK(content_hash(a) == content_hash(b));

    b.values[7] = std::nextafter(b.values[7], 1e300);
    CHECK(content_hash(a) != content_hash(b));

    DataMatrix c = a;
    c.labels.assign(5, 0);
    CHECK(content_hash(a) != content_hash(c));

    DataMatrix d = a;
    d.labels.assign(5, 0);
    d.labels[2] = 1;
    CHECK(content_hash(c) != content_hash(d));
}

TEST_CASE("content_hash distinguishes shape from flat content") {
    DataMatrix a = make_matrix(2, 3);
    DataMatrix b = make_matrix(3, 2);
    a.values = {1, 2, 3, 4, 5, 6};
    b.values = {1, 2, 3, 4, 5, 6};
    CHECK(content_hash(a) != content_hash(b));
}

TEST_CASE("manifest keeps insertion order and replaces on re-set") {
    Manifest m;
    m.set("alpha", 1.5);
    m.set("beta", std::string("text"));
    m.set("gamma", true);
    m.set("alpha", 2.5);  // replaces in place, order preserved

    REQUIRE(m.entries().size() == 3);
    CHECK(m.entries()[0].first == "alpha");
    CHECK(m.entries()[0].second == "2.5");
    CHECK(m.entries()[1].first == "beta");
    CHECK(m.entries()[2].second == "true");

    CHECK(m.require_double("alpha") == 2.5);
    CHECK(m.require("beta") == "text");
    CHECK(m.require_bool("gamma") == true);
    CHECK_FALSE(m.get("missing").has_value());
    CHECK(thrown_message<DataError>([&] { (void)m.require("missing"); }) != "");
}

TEST_CASE("manifest serialize/parse round-trip") {
    Manifest m;
    m.set("seed", std::uint64_t{18446744073709551615ull});
    m.set("tol", 1e-6);
    m.set("name", std::string("run a"));
    m.set("flag", false);

    const std::string text = m.serialize();
    const Manifest back = Manifest::parse(text);
    CHECK(back.entries() == m.entries());
    CHECK(back.require_u64("seed") == 18446744073709551615ull);
    CHECK(back.require_double("tol") == 1e-6);
    CHECK(back.require_bool("flag") == false);
}

TEST_CASE("manifest parse skips comments and blanks, rejects junk") {
    const Manifest m = Manifest::parse("# comment\n\nkey=value\nother=1\r\n");
    CHECK(m.require("key") == "value");
    CHECK(m.require("other") == "1");
    CHECK(thrown_message<DataError>([] { (void)Manifest::parse("no equals sign\n"); }) != "");
    CHECK(thrown_message<DataError>([] {
              Manifest m2;
              m2.set("k", std::string("notanumber"));
              (void)m2.require_double("k");
          }) != "");
}

TEST_CASE("manifest write/load round-trips through a file") {
    ScratchDir tmp("manifest_file");
    Manifest m;
    m.set("a", 1);
    m.set("b", std::string("two"));
    const std::string path = tmp.file("m.txt");
    m.write(path);
    const Manifest back = Manifest::load(path);
    CHECK(back.entries() == m.entries());
}

TEST_CASE("mix_seed is deterministic and order-sensitive") {
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    CHECK(mix_seed(1, 2, 3) != mix_seed(1, 2));
    CHECK(mix_seed(1, 2, 3, 4) != mix_seed(1, 2, 3));
}
