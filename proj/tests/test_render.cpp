#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "ancsieve/render.hpp"

using namespace ancsieve;

namespace {

long occurrences(const std::string& s, const std::string& needle)
{
    long n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("minimal diagram matches the golden file", "[render]")
{
    RenderSpec spec;
    spec.perm = Permutation::parse(2, "(1,2)");
    const auto r = render_svg(spec);
    CHECK(r.warnings.empty());
    const std::string golden = slurp(std::string(GOLDEN_DIR) + "/render_1_1.svg");
    REQUIRE_FALSE(golden.empty());
    CHECK(r.svg == golden);
}

TEST_CASE("one group per cycle", "[render]")
{
    RenderSpec spec;
    spec.n = 9;
    spec.m = 6;
    spec.perm = Permutation::parse(15, "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)");
    const auto r = render_svg(spec);
    CHECK(r.warnings.empty());
    CHECK(occurrences(r.svg, "class=\"cycle\"") == 4);
    CHECK(r.svg.find("data-cycle=\"(1,2,3,6,15,10,11)\"") != std::string::npos);
    CHECK(r.svg.rfind("<?xml", 0) == 0);
    CHECK(occurrences(r.svg, "<text") == 15);
    CHECK(render_svg(spec).svg == r.svg);
}

TEST_CASE("styling parameters", "[render]")
{
    RenderSpec spec;
    spec.n = 2;
    spec.m = 2;
    spec.perm = Permutation::parse(4, "(1,3)(2,4)");
    spec.size = 250;
    spec.font_size = 9;
    const auto svg = render_svg(spec).svg;
    CHECK(svg.find("width=\"250\"") != std::string::npos);
    CHECK(svg.find("font-size=\"9\"") != std::string::npos);
}

TEST_CASE("warnings and errors", "[render]")
{
    RenderSpec spec;
    spec.n = 2;
    spec.m = 2;
    spec.perm = Permutation::parse(4, "(1,2)");
    const auto warned = render_svg(spec);
    CHECK(warned.warnings.size() == 1);
    CHECK(occurrences(warned.svg, "class=\"cycle\"") == 3);
    spec.force = true;
    CHECK(render_svg(spec).warnings.empty());
    spec.perm = Permutation::identity(3);
    CHECK_THROWS_AS(render_svg(spec), std::invalid_argument);
    spec.perm = Permutation::identity(4);
    spec.size = 0;
    CHECK_THROWS_AS(render_svg(spec), std::invalid_argument);
}
