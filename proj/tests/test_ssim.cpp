#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "sketcheval/errors.hpp"
#include "sketcheval/ssim.hpp"

using namespace sketcheval;

namespace {

// closed form for two constant images: variances vanish, the contrast term
// cancels, leaving (2uv + C1)/(u^2 + v^2 + C1)
double constant_ssim(double u, double v, const SsimParams& p = {}) {
    double c1 = (p.k1 * p.dynamic_range) * (p.k1 * p.dynamic_range);
    return (2.0 * u * v + c1) / (u * u + v * v + c1);
}

}  // namespace

TEST_CASE("ssim of an image with itself is 1") {
    oracles::TestRng rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        GrayImage img = oracles::random_image(rng, rng.range(11, 40), rng.range(11, 40));
        CHECK(std::abs(ssim(img, img) - 1.0) <= 1e-12);
    }
}

TEST_CASE("ssim matches the constant-image closed form") {
    GrayImage a = make_image(16, 16, 0.5);
    GrayImage b = make_image(16, 16, 0.25);
    double expected = constant_ssim(0.5, 0.25);
    CHECK(expected == doctest::Approx(0.2501 / 0.3126).epsilon(1e-12));
    CHECK(ssim(a, b) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("ssim is symmetric") {
    oracles::TestRng rng(55);
    for (int trial = 0; trial < 5; ++trial) {
        GrayImage a = oracles::random_image(rng, 20, 20);
        GrayImage b = oracles::random_image(rng, 20, 20);
        CHECK(std::abs(ssim(a, b) - ssim(b, a)) <= 1e-12);
    }
}

TEST_CASE("ssim stays within [-1, 1]") {
    oracles::TestRng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        GrayImage a = oracles::random_image(rng, 16, 16);
        GrayImage b = a;
        for (double& v : b.data) v = 1.0 - v;  // anticorrelated
        double s = ssim(a, b);
        CHECK(s <= 1.0 + 1e-12);
        CHECK(s >= -1.0 - 1e-12);
    }
}

TEST_CASE("ssim rejects invalid input") {
    GrayImage a = make_image(16, 16, 0.5);
    CHECK_THROWS_AS(ssim(a, make_image(16, 17, 0.5)), argument_error);
    CHECK_THROWS_AS(ssim(make_image(8, 8, 0.5), make_image(8, 8, 0.5)), argument_error);

    SsimParams bad;
    bad.window_size = 10;  // even
    CHECK_THROWS_AS(ssim(a, a, bad), argument_error);
    bad = {};
    bad.window_sigma = 0.0;
    CHECK_THROWS_AS(ssim(a, a, bad), argument_error);
}

TEST_CASE("mean_pairwise_ssim over identical renders is 1") {
    oracles::TestRng rng(3);
    GrayImage img = oracles::random_image(rng, 18, 18);
    RenderSet set = gather_render_set("s", {img, img, img, img});
    PairwiseSsim result = mean_pairwise_ssim(set);
    CHECK(result.mean == 1.0);
    CHECK(!result.degenerate);
}

TEST_CASE("mean_pairwise_ssim averages the constructed pair values") {
    // renders {a, a, c}: pairs give {1, s_ac, s_ac}
    GrayImage a = make_image(16, 16, 0.8);
    GrayImage c = make_image(16, 16, 0.8 * (2.0 - std::sqrt(3.0)));
    double s_ac = constant_ssim(0.8, 0.8 * (2.0 - std::sqrt(3.0)));
    CHECK(s_ac == doctest::Approx(0.5).epsilon(2e-4));  // constants chosen for 1/2

    RenderSet set = gather_render_set("s", {a, a, c});
    double expected = (1.0 + 2.0 * s_ac) / 3.0;
    CHECK(mean_pairwise_ssim(set).mean == doctest::Approx(expected).epsilon(1e-9));
    CHECK(structural_diversity(set).value == doctest::Approx(1.0 - expected).epsilon(1e-9));
}

TEST_CASE("singleton render sets are degenerate and maximally self-similar") {
    GrayImage img = make_image(16, 16, 0.5);
    RenderSet set = gather_render_set("s", {img});
    PairwiseSsim mean = mean_pairwise_ssim(set);
    CHECK(mean.mean == 1.0);
    CHECK(mean.degenerate);
    DiversityScore diversity = structural_diversity(set);
    CHECK(diversity.value == 0.0);
    CHECK(diversity.degenerate);
}

TEST_CASE("structural_diversity of identical renders is exactly zero") {
    oracles::TestRng rng(8);
    GrayImage img = oracles::random_image(rng, 20, 20);
    for (int copies = 2; copies <= 5; ++copies) {
        RenderSet set = gather_render_set("s", std::vector<GrayImage>(copies, img));
        CHECK(structural_diversity(set).value == 0.0);
    }
}

TEST_CASE("duplicating a render never increases diversity in small sets") {
    // provable for n <= 3; larger mixed sets can legitimately gain diversity
    oracles::TestRng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<GrayImage> renders;
        for (int i = 0; i < 2 + trial % 2; ++i)
            renders.push_back(oracles::random_image(rng, 16, 16));
        RenderSet base = gather_render_set("s", renders);
        double before = structural_diversity(base).value;
        renders.push_back(renders[static_cast<std::size_t>(trial) % renders.size()]);
        RenderSet extended = gather_render_set("s", renders);
        double after = structural_diversity(extended).value;
        CHECK(after <= before + 1e-12);
    }
}

TEST_CASE("gather_render_set aligns mismatched dimensions") {
    GrayImage a = make_image(20, 20, 0.5);
    GrayImage b = make_image(30, 10, 0.5);
    RenderSet set = gather_render_set("s", {a, b});
    CHECK(set.resized);
    CHECK(set.renders[1].width == 20);
    CHECK(set.renders[1].height == 20);
    CHECK(structural_diversity(set).value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("mean_pairwise_ssim is independent of the worker count") {
    oracles::TestRng rng(64);
    std::vector<GrayImage> renders;
    for (int i = 0; i < 6; ++i) renders.push_back(oracles::random_image(rng, 16, 16));
    RenderSet set = gather_render_set("s", renders);
    double one = mean_pairwise_ssim(set, {}, 1).mean;
    double four = mean_pairwise_ssim(set, {}, 4).mean;
    CHECK(one == four);
}
