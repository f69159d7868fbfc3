#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rpbs {

/// The four generators b+, b-, f+, f-.
enum class Generator : std::uint8_t { BPlus, BMinus, FPlus, FMinus };

inline constexpr std::array<Generator, 4> kAllGenerators = {Generator::BPlus, Generator::BMinus,
                                                            Generator::FPlus, Generator::FMinus};

constexpr std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::BPlus: return "b+";
    case Generator::BMinus: return "b-";
    case Generator::FPlus: return "f+";
    case Generator::FMinus: return "f-";
  }
  return "?";
}

inline std::optional<Generator> generator_from_string(std::string_view s) {
  for (auto g : kAllGenerators)
    if (to_string(g) == s) return g;
  return std::nullopt;
}

/// Formal adjoint: (b-)^dagger = b+, (f-)^dagger = f+.
constexpr Generator dagger(Generator g) {
  switch (g) {
    case Generator::BPlus: return Generator::BMinus;
    case Generator::BMinus: return Generator::BPlus;
    case Generator::FPlus: return Generator::FMinus;
    case Generator::FMinus: return Generator::FPlus;
  }
  return g;
}

constexpr bool is_bosonic(Generator g) { return g == Generator::BPlus || g == Generator::BMinus; }
constexpr bool is_creator(Generator g) { return g == Generator::BPlus || g == Generator::FPlus; }

/// Shift of the paraboson index m produced by g.
constexpr int m_shift(Generator g) {
  return g == Generator::BPlus ? 1 : g == Generator::BMinus ? -1 : 0;
}
/// Shift of the parafermion index n produced by g.
constexpr int n_shift(Generator g) {
  return g == Generator::FPlus ? 1 : g == Generator::FMinus ? -1 : 0;
}

}  // namespace rpbs
