#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "specsal/cli_commands.hpp"
#include "specsal/pgm.hpp"
#include "specsal/spectral.hpp"

using namespace specsal;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("specsal_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generate: files, balanced manifest, reproducible bytes") {
    const fs::path dir = fresh_dir("gen");
    GenerateOptions opt;
    opt.task = TaskKind::sd1;
    opt.count = 20;
    opt.seed = 7;
    opt.out_dir = (dir / "a").string();
    REQUIRE(cmd_generate(opt) == kExitOk);

    int files = 0, label1 = 0, label2 = 0;
    for (const auto& entry : fs::directory_iterator(dir / "a")) {
        if (entry.path().extension() == ".pgm") ++files;
    }
    CHECK(files == 20);

    const std::string manifest = slurp(dir / "a" / "manifest.csv");
    std::stringstream lines(manifest);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("sd1_1_", 0) == 0) ++label1;
        if (line.rfind("sd1_2_", 0) == 0) ++label2;
    }
    CHECK(label1 == 10);
    CHECK(label2 == 10);

    // byte-identical second run
    opt.out_dir = (dir / "b").string();
    REQUIRE(cmd_generate(opt) == kExitOk);
    CHECK(slurp(dir / "b" / "manifest.csv") == manifest);
    for (const auto& entry : fs::directory_iterator(dir / "a")) {
        if (entry.path().extension() != ".pgm") continue;
        CHECK(slurp(entry.path()) == slurp(dir / "b" / entry.path().filename()));
    }
}

TEST_CASE("generate: manifest labels survive the class-rule oracle") {
    const fs::path dir = fresh_dir("gen_oracle");
    GenerateOptions opt;
    opt.task = TaskKind::sd1;
    opt.count = 10;
    opt.seed = 3;
    opt.out_dir = dir.string();
    REQUIRE(cmd_generate(opt) == kExitOk);

    std::stringstream lines(slurp(dir / "manifest.csv"));
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("filename", 0) == 0) continue;
        const std::string filename = line.substr(0, line.find(','));
        const int label = line[filename.size() + 1] - '0';
        const GrayImage img = read_gray_image((dir / filename).string());
        const auto figures = oracle::stroke_components(img);
        REQUIRE(figures.size() == 2);
        const double diff = oracle::best_alignment_difference(figures[0], figures[1]);
        if (label == 1) {
            CHECK(diff == 0.0);
        } else {
            CHECK(diff >= 0.05);
        }
    }
}

TEST_CASE("generate: bars and gaze kinds are materialized too") {
    const fs::path dir = fresh_dir("gen_misc");
    GenerateOptions bars;
    bars.task = TaskKind::bars;
    bars.count = 4;
    bars.seed = 5;
    bars.out_dir = (dir / "bars").string();
    REQUIRE(cmd_generate(bars) == kExitOk);
    CHECK(fs::exists(dir / "bars" / "bars_1_0.pgm"));
    CHECK(fs::exists(dir / "bars" / "bars_2_1.pgm"));

    GenerateOptions gaze;
    gaze.task = TaskKind::gaze_intensity;
    gaze.count = 1;
    gaze.seed = 0;
    gaze.out_dir = (dir / "gaze").string();
    REQUIRE(cmd_generate(gaze) == kExitOk);
    CHECK(slurp(dir / "gaze" / "manifest.csv").find("target_box=") != std::string::npos);
}

TEST_CASE("generate: unwritable directory is a usage error") {
    GenerateOptions opt;
    opt.task = TaskKind::sd1;
    opt.count = 2;
    opt.out_dir = "/proc/version/nope";
    CHECK(cmd_generate(opt) == kExitUsage);
}

TEST_CASE("transform: spectra render, sidecar parameters, idempotence") {
    const fs::path dir = fresh_dir("transform");
    const fs::path input = dir / "bars.pgm";
    write_pgm(input.string(), gen_bars(11, 8, true));

    TransformOptions opt;
    opt.input = input.string();
    opt.output = (dir / "out_ap.pgm").string();
    opt.feature = "A_p";
    opt.p = 10;
    opt.wf = 0.2;
    REQUIRE(cmd_transform(opt) == kExitOk);
    CHECK(fs::exists(dir / "out_ap.pgm"));

    const std::string sidecar = slurp(dir / "out_ap.pgm.params.txt");
    CHECK(sidecar.find("p=10") != std::string::npos);
    CHECK(sidecar.find("w=19") != std::string::npos);
    CHECK(sidecar.find("feature=A_p") != std::string::npos);

    // the stripe fundamental is visibly darker after filtering
    TransformOptions plain = opt;
    plain.feature = "A";
    plain.output = (dir / "out_a.pgm").string();
    REQUIRE(cmd_transform(plain) == kExitOk);
    const GrayImage filtered = read_gray_image((dir / "out_ap.pgm").string());
    const GrayImage unfiltered = read_gray_image((dir / "out_a.pgm").string());
    // display is fftshifted: bin (12, 0) lands at (48+12, 48)
    CHECK(filtered.at(60, 48) < unfiltered.at(60, 48) - 0.2);

    const std::string first = slurp(dir / "out_ap.pgm");
    REQUIRE(cmd_transform(opt) == kExitOk);
    CHECK(slurp(dir / "out_ap.pgm") == first);
    CHECK(slurp(dir / "out_ap.pgm.params.txt") == sidecar);
}

TEST_CASE("transform: saliency and raw outputs") {
    const fs::path dir = fresh_dir("transform_sal");
    const fs::path input = dir / "img.pgm";
    write_pgm(input.string(), gen_task15(5, 2)[0].image);

    TransformOptions opt;
    opt.input = input.string();
    opt.feature = "S_p";
    opt.output = (dir / "sal.pgm").string();
    REQUIRE(cmd_transform(opt) == kExitOk);
    const GrayImage map = read_gray_image((dir / "sal.pgm").string());
    CHECK(map.width == 96);

    opt.feature = "raw";
    opt.output = (dir / "raw.pgm").string();
    CHECK(cmd_transform(opt) == kExitOk);
}

TEST_CASE("transform: missing input file exits with 2") {
    TransformOptions opt;
    opt.input = "/nonexistent/image.pgm";
    opt.output = "/tmp/never.pgm";
    CHECK(cmd_transform(opt) == kExitUsage);
}

TEST_CASE("transform: unknown feature kind is a usage error") {
    const fs::path dir = fresh_dir("transform_bad");
    const fs::path input = dir / "img.pgm";
    write_pgm(input.string(), GrayImage(8, 8, 0.5));
    TransformOptions opt;
    opt.input = input.string();
    opt.feature = "B_q";
    opt.output = (dir / "out.pgm").string();
    CHECK(cmd_transform(opt) == kExitUsage);
}

TEST_CASE("grayscale PNG input decodes to the expected intensities") {
    // 6x4 8-bit gray PNG with pixel value 40*x + 10*y
    static const unsigned char png_bytes[] = {
        0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a, 0x00, 0x00, 0x00, 0x0d, 0x49, 0x48,
        0x44, 0x52, 0x00, 0x00, 0x00, 0x06, 0x00, 0x00, 0x00, 0x04, 0x08, 0x00, 0x00, 0x00,
        0x00, 0x88, 0x6f, 0x11, 0x9f, 0x00, 0x00, 0x00, 0x17, 0x49, 0x44, 0x41, 0x54, 0x78,
        0x9c, 0x63, 0x64, 0xd0, 0xd0, 0xd0, 0xd0, 0xd0, 0x60, 0xe2, 0xe2, 0xe2, 0xe2, 0xe2,
        0xe2, 0x42, 0xa5, 0x00, 0x1a, 0xae, 0x01, 0x84, 0x08, 0x77, 0xc8, 0x62, 0x00, 0x00,
        0x00, 0x00, 0x49, 0x45, 0x4e, 0x44, 0xae, 0x42, 0x60, 0x82};
    const fs::path dir = fresh_dir("png");
    const fs::path path = dir / "gradient.png";
    std::ofstream(path, std::ios::binary)
        .write(reinterpret_cast<const char*>(png_bytes), sizeof(png_bytes));

    const GrayImage img = read_gray_image(path.string());
    REQUIRE(img.width == 6);
    REQUIRE(img.height == 4);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 6; ++x)
            CHECK(img.at(x, y) == doctest::Approx((40.0 * x + 10.0 * y) / 255.0).epsilon(1e-9));

    // and the transform command accepts PNG input directly
    TransformOptions opt;
    opt.input = path.string();
    opt.feature = "raw";
    opt.output = (dir / "out.pgm").string();
    CHECK(cmd_transform(opt) == kExitOk);
    CHECK(fs::exists(dir / "out.pgm"));
}

TEST_CASE("unsupported input formats are rejected") {
    const fs::path dir = fresh_dir("badfmt");
    std::ofstream(dir / "noise.bin", std::ios::binary) << "definitely not an image";
    CHECK_THROWS_AS(read_gray_image((dir / "noise.bin").string()), std::runtime_error);
}

TEST_CASE("pgm round-trip and P2 parsing") {
    const fs::path dir = fresh_dir("pgm");
    const GrayImage img = gen_bars(2, 6, false);
    write_pgm((dir / "x.pgm").string(), img);
    const GrayImage back = read_gray_image((dir / "x.pgm").string());
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    for (size_t i = 0; i < img.data.size(); ++i)
        CHECK(back.data[i] == doctest::Approx(img.data[i]).epsilon(1.0 / 255));

    std::ofstream ascii(dir / "p2.pgm");
    ascii << "P2\n# comment\n3 2\n255\n0 128 255\n255 128 0\n";
    ascii.close();
    const GrayImage p2 = read_gray_image((dir / "p2.pgm").string());
    CHECK(p2.width == 3);
    CHECK(p2.height == 2);
    CHECK(p2.at(0, 0) == 0.0);
    CHECK(p2.at(2, 0) == 1.0);
    CHECK(p2.at(1, 1) == doctest::Approx(128.0 / 255));
}

TEST_CASE("16-bit P5 input scales by its maxval") {
    const fs::path dir = fresh_dir("pgm16");
    std::ofstream out(dir / "deep.pgm", std::ios::binary);
    out << "P5\n2 1\n65535\n";
    const unsigned char bytes[] = {0xff, 0xff, 0x7f, 0xff};  // big-endian 65535, 32767
    out.write(reinterpret_cast<const char*>(bytes), 4);
    out.close();
    const GrayImage img = read_gray_image((dir / "deep.pgm").string());
    CHECK(img.at(0, 0) == doctest::Approx(1.0));
    CHECK(img.at(1, 0) == doctest::Approx(32767.0 / 65535.0));
}

TEST_CASE("evaluate: report shape, reproducibility, exit codes") {
    const fs::path dir = fresh_dir("evaluate");
    EvaluateOptions opt;
    opt.tasks = {TaskKind::sd1};
    opt.features = {"raw", "A"};
    opt.trials = 1;
    opt.test_size = 50;
    opt.seed = 11;
    opt.report_path = (dir / "report.csv").string();
    REQUIRE(cmd_evaluate(opt) == kExitOk);

    const std::string report = slurp(dir / "report.csv");
    int data_rows = 0, mean_rows = 0;
    std::stringstream lines(report);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("sd1,", 0) == 0) {
            if (line.find(",mean,") != std::string::npos) {
                ++mean_rows;
            } else {
                ++data_rows;
            }
        }
    }
    CHECK(data_rows == 2);  // 1 trial x 2 features
    CHECK(mean_rows == 2);
    CHECK(report.find("# command=evaluate") != std::string::npos);
    CHECK(report.find("seed=11") != std::string::npos);

    opt.report_path = (dir / "report2.csv").string();
    REQUIRE(cmd_evaluate(opt) == kExitOk);
    CHECK(slurp(dir / "report2.csv") == report);

    EvaluateOptions bad = opt;
    bad.features = {};
    CHECK(cmd_evaluate(bad) == kExitUsage);
    bad = opt;
    bad.report_path = "/proc/version/nope.csv";
    CHECK(cmd_evaluate(bad) == kExitUsage);
}

TEST_CASE("sweep: one-cell grid selects that cell; sigma sweep reports a curve") {
    const fs::path dir = fresh_dir("sweep");
    SweepOptions opt;
    opt.tasks = {TaskKind::sd1};
    opt.grid.p_values = {10};
    opt.grid.wf_values = {0.1};
    opt.grid.k_values = {1};
    opt.val_trials = 1;
    opt.test_size = 20;
    opt.seed = 4;
    opt.report_path = (dir / "sweep.csv").string();
    REQUIRE(cmd_sweep(opt) == kExitOk);
    const std::string report = slurp(dir / "sweep.csv");
    CHECK(report.find("# selected p=10 wf=0.1 k=1") != std::string::npos);

    SweepOptions sig = opt;
    sig.sigma_sweep = true;
    sig.sigmas = {0.5, 2.0};
    sig.report_path = (dir / "sigma.csv").string();
    REQUIRE(cmd_sweep(sig) == kExitOk);
    const std::string curve = slurp(dir / "sigma.csv");
    CHECK(curve.find("sigma,mean_accuracy") != std::string::npos);
    CHECK(curve.find("0.5,") != std::string::npos);
    CHECK(curve.find("2,") != std::string::npos);
}
