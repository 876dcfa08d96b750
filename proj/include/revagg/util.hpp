#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revagg {

// ---- string helpers --------------------------------------------------------

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool is_ascii_alnum(char c);
bool is_ascii_space(char c);

// Maximal whitespace-delimited tokens.
std::vector<std::string> split_whitespace(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Joins skipping empty parts so separators never double up.
std::string join_nonempty(const std::vector<std::string>& parts,
                          std::string_view sep);

// Shortest decimal form that round-trips a double (up to 17 significant digits).
std::string format_double(double v);

// ---- deterministic RNG -----------------------------------------------------

// splitmix64: tiny, fast, identical on every platform. Used everywhere the
// toolkit needs seeded randomness so outputs are bit-reproducible.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., n-1}; n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    // Lemire's multiply-shift; bias is rejected exactly.
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view data);

// Deterministic in-place Fisher-Yates.
template <typename T>
void seeded_shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

// ---- SHA-256 ---------------------------------------------------------------

// FIPS 180-4 SHA-256; keys the embedding store and corpus checksums.
std::string sha256_hex(std::string_view data);

// ---- minimal CSV -----------------------------------------------------------

// RFC-4180-style quoting: fields containing comma, quote, or newline are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);
std::vector<std::string> parse_csv_row(std::string_view line);

}  // namespace revagg
