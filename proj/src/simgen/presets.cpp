#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detta/core/errors.hpp"
#include "detta/simgen/generator.hpp"

namespace detta::simgen {

namespace {

NoiseSpec moderate_noise() {
  NoiseSpec n;
  n.det_miss_prob = 0.03;
  n.det_fp_rate = 0.05;
  n.det_center_sigma = 1.5;
  n.det_size_sigma = 1.5;
  n.head_sigma = 20.0;
  n.head_outlier_prob = 0.05;
  n.joint_sigma = {3.0, 3.0, 4.0, 4.0, 5.0, 5.0, 7.0, 7.0};
  n.joint_dropout.fill(0.05);
  return n;
}

ScenarioSpec single_walker() {
  ScenarioSpec s;
  s.name = "single-walker";
  s.frames = 300;
  s.noise = moderate_noise();
  PersonSpec p;
  p.id = 1;
  p.entry = 0;
  p.exit = 299;
  p.start = {40.0, 140.0, 80.0, 200.0};
  p.motion = {{150, 40.0, 0.0}, {60, 0.0, 0.0}, {90, -30.0, 5.0}};
  p.head_initial = 0.0;
  p.head = {{100, 60.0}, {100, -45.0}, {100, 30.0}};
  s.persons.push_back(p);
  return s;
}

ScenarioSpec crossing_pair() {
  ScenarioSpec s;
  s.name = "crossing-pair";
  s.frames = 240;
  s.noise = moderate_noise();
  PersonSpec a;
  a.id = 1;
  a.entry = 0;
  a.exit = 239;
  a.start = {40.0, 140.0, 80.0, 200.0};
  a.motion = {{240, 60.0, 0.0}};
  a.head_initial = 90.0;
  a.head = {{120, 40.0}, {120, -40.0}};
  PersonSpec b;
  b.id = 2;
  b.entry = 0;
  b.exit = 239;
  b.start = {520.0, 160.0, 80.0, 200.0};
  b.motion = {{240, -60.0, 0.0}};
  b.head_initial = -90.0;
  b.head = {{80, -60.0}, {80, 0.0}, {80, 60.0}};
  s.persons = {a, b};
  return s;
}

// Passengers walking off a gate: staggered entries over the sequence, each
// walking in, stopping to look around, and walking on.
ScenarioSpec deboarding_77() {
  constexpr int kPersons = 77;
  constexpr FrameIndex kFrames = 1218;

  ScenarioSpec s;
  s.name = "deboarding-77";
  s.frames = kFrames;
  s.noise.det_miss_prob = 0.05;
  s.noise.det_fp_rate = 0.2;
  s.noise.det_center_sigma = 2.0;
  s.noise.det_size_sigma = 3.0;
  s.noise.head_sigma = 25.0;
  s.noise.head_outlier_prob = 0.1;
  s.noise.joint_sigma = {4.0, 4.0, 5.0, 5.0, 6.0, 6.0, 9.0, 9.0};
  s.noise.joint_dropout.fill(0.1);

  // Layout randomness is part of the preset, independent of the run seed.
  std::mt19937_64 rng(1218);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto uni_int = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  const double fps = s.fps;
  for (int k = 0; k < kPersons; ++k) {
    PersonSpec p;
    p.id = static_cast<PersonId>(k + 1);
    p.entry = static_cast<FrameIndex>(std::llround(k * (kFrames - 160) / double(kPersons - 1)));
    const std::int64_t lifetime = std::min<std::int64_t>(uni_int(150, 330), kFrames - p.entry);
    p.exit = p.entry + lifetime - 1;

    const double h = uni(140.0, 220.0);
    const double w = 0.4 * h;
    const double max_x = s.image_width - w - 5.0;
    const double max_y = s.image_height - h - 5.0;
    const double x0 = uni(5.0, max_x), x1 = uni(5.0, max_x), x2 = uni(5.0, max_x);
    const double y0 = uni(5.0, max_y);
    const double y1 = std::clamp(y0 + uni(-40.0, 40.0), 5.0, max_y);
    const double y2 = std::clamp(y1 + uni(-40.0, 40.0), 5.0, max_y);
    p.start = {x0, y0, w, h};

    const std::int64_t walk_in = lifetime * 2 / 5;
    const std::int64_t pause = lifetime / 4;
    const std::int64_t walk_out = lifetime - walk_in - pause;
    p.motion = {{walk_in, (x1 - x0) * fps / double(walk_in), (y1 - y0) * fps / double(walk_in)},
                {pause, 0.0, 0.0},
                {walk_out, (x2 - x1) * fps / double(walk_out), (y2 - y1) * fps / double(walk_out)}};

    p.head_initial = uni(-180.0, 180.0);
    const std::int64_t quarter = lifetime / 4;
    for (int seg = 0; seg < 4; ++seg) {
      const std::int64_t frames = seg < 3 ? quarter : lifetime - 3 * quarter;
      p.head.push_back({frames, uni(-120.0, 120.0)});
    }
    s.persons.push_back(p);
  }
  return s;
}

// A 10x10 grid of stationary, well separated people whose heads turn at a
// constant 150 deg/s (5 deg per frame at 30 fps), observed with 20 deg noise.
ScenarioSpec turning_heads() {
  ScenarioSpec s;
  s.name = "turning-heads";
  s.frames = 300;
  s.noise.head_sigma = 20.0;
  s.noise.joint_sigma.fill(1.0);
  for (int row = 0; row < 10; ++row) {
    for (int col = 0; col < 10; ++col) {
      const int k = row * 10 + col;
      PersonSpec p;
      p.id = static_cast<PersonId>(k + 1);
      p.entry = 0;
      p.exit = s.frames - 1;
      p.start = {64.0 * col + 12.0, 48.0 * row + 4.0, 40.0, 40.0};
      p.motion = {{s.frames, 0.0, 0.0}};
      p.head_initial = static_cast<double>((k * 37) % 360) - 179.0;
      p.head = {{s.frames, (row + col) % 2 == 0 ? 150.0 : -150.0}};
      s.persons.push_back(p);
    }
  }
  return s;
}

}  // namespace

std::vector<std::string_view> preset_names() {
  return {"single-walker", "crossing-pair", "deboarding-77", "turning-heads"};
}

ScenarioSpec preset(std::string_view name) {
  if (name == "single-walker") return single_walker();
  if (name == "crossing-pair") return crossing_pair();
  if (name == "deboarding-77") return deboarding_77();
  if (name == "turning-heads") return turning_heads();
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

}  // namespace detta::simgen
