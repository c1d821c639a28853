#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tropgeo/tropgeo.hpp"

using namespace tropgeo;

namespace {

const std::vector<std::string> XY{"x", "y"};

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("tropical line renders as three line elements", "[svg]") {
    TropPoly F = parse_min_poly("min-poly: 0,x; 0,y; 0,1", XY);
    std::string svg = render_svg(dual_curve(F));
    CHECK(count_occurrences(svg, "<line ") == 3);
    CHECK(count_occurrences(svg, "<text ") == 0);  // all weights are 1
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
}

TEST_CASE("quartic fan renders four rays with two weight labels", "[svg]") {
    auto f = parse_poly("x^2*y^2+x^3+y^3+1", ValuationSpec::trivial(), XY);
    std::string svg = render_svg(dual_curve(tropicalize(f)));
    CHECK(count_occurrences(svg, "<line ") == 4);
    CHECK(count_occurrences(svg, ">3</text>") == 2);

    RenderOptions no_labels;
    no_labels.weight_labels = false;
    std::string bare = render_svg(dual_curve(tropicalize(f)), no_labels);
    CHECK(count_occurrences(bare, "<text ") == 0);
}

TEST_CASE("rendering is deterministic", "[svg]") {
    auto f = parse_poly("2*x^2+x*y-6*y^2+5*x-3*y+2", ValuationSpec::padic(2), XY);
    TropicalPlaneCurve C = dual_curve(tropicalize(f));
    RenderOptions opts;
    opts.show_subdivision = true;
    CHECK(render_svg(C, opts) == render_svg(C, opts));
}

TEST_CASE("two-adic quadric figure matches the golden file", "[svg]") {
    auto f = parse_poly("2*x^2+x*y-6*y^2+5*x-3*y+2", ValuationSpec::padic(2), XY);
    std::string svg = render_svg(dual_curve(tropicalize(f)));
    // 3 bounded edges + 6 rays
    CHECK(count_occurrences(svg, "<line ") == 9);
    const std::string golden = read_file(std::string(TEST_DATA_DIR) + "/quadric_2adic.svg");
    CHECK(svg == golden);
}

TEST_CASE("explicit viewport and clip length", "[svg]") {
    TropPoly F = parse_min_poly("min-poly: 0,x; 0,y; 0,1", XY);
    RenderOptions opts;
    opts.viewport = Viewport{Rat(-2), Rat(-2), Rat(2), Rat(2)};
    opts.ray_clip_length = Rat(1);
    opts.scale = Rat(10);
    std::string svg = render_svg(dual_curve(F), opts);
    CHECK(svg.find("width=\"40\" height=\"40\"") != std::string::npos);
    // ray toward (1,0) clipped at one unit: endpoint (1,0) -> svg (30, 20)
    CHECK(svg.find("x2=\"30\" y2=\"20\"") != std::string::npos);
}
