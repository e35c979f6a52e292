// fracgrad-synth: write the synthetic test scenes used by the test suite.
//
//   fracgrad-synth --kind gaussian_spots --width 256 --height 256 --seed 7 \
//       --spots spots.csv field.png

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fracgrad/errors.hpp"
#include "fracgrad/image_io.hpp"
#include "fracgrad/pipeline.hpp"
#include "fracgrad/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate synthetic grayscale test scenes", "fracgrad-synth"};
  std::string kind_name;
  std::size_t width = 128;
  std::size_t height = 128;
  std::uint64_t seed = 0;
  std::string spots_path;
  std::string output;
  app.add_option("--kind", kind_name, "step | ramp | disk | impulse_grid | gaussian_spots")
      ->required();
  app.add_option("--width", width)->capture_default_str();
  app.add_option("--height", height)->capture_default_str();
  app.add_option("--seed", seed, "Seed for gaussian_spots")->capture_default_str();
  app.add_option("--spots", spots_path, "CSV of planted sources (gaussian_spots only)");
  app.add_option("output", output, "Output raster (.png, .pgm)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fracgrad-synth: " << e.what() << "\n";
    return static_cast<int>(fracgrad::ExitCode::usage);
  }

  try {
    const auto kind = fracgrad::parse_test_image_kind(kind_name);
    if (kind == fracgrad::TestImageKind::gaussian_spots) {
      const auto field = fracgrad::generate_spot_field(width, height, seed);
      fracgrad::write_image(field.image, output);
      if (!spots_path.empty()) {
        std::ofstream csv(spots_path);
        if (!csv) throw fracgrad::IoError("cannot open " + spots_path);
        csv << "x,y,amplitude\n";
        for (const auto& s : field.spots) csv << s.x << "," << s.y << "," << s.amplitude << "\n";
      }
    } else {
      fracgrad::write_image(fracgrad::generate_test_image(kind, width, height, seed), output);
    }
  } catch (const fracgrad::DomainError& e) {
    std::cerr << "fracgrad-synth: " << e.what() << "\n";
    return static_cast<int>(fracgrad::ExitCode::numeric);
  } catch (const std::exception& e) {
    std::cerr << "fracgrad-synth: " << e.what() << "\n";
    return static_cast<int>(fracgrad::ExitCode::io);
  }
  return 0;
}
