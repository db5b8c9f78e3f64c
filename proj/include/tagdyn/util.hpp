// Shared small utilities: error types, UTC time handling, string/CSV
// helpers and a streaming FNV-1a digest used for run manifests.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tagdyn {

// Malformed or inconsistent input data. Mapped to exit code 2 by the CLI.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. Mapped to exit code 3 by the CLI.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr int64_t kSecondsPerDay = 86400;

// Days since 1970-01-01 for a proleptic Gregorian date (Hinnant's algorithm).
int64_t days_from_civil(int year, int month, int day);

// Parses "YYYY-MM-DD" into a UTC midnight epoch timestamp.
int64_t parse_utc_date(const std::string& s);

// Accepts integer epoch seconds, "YYYY-MM-DD", or ISO-8601
// "YYYY-MM-DD[T ]HH:MM:SS[Z]". Throws DataError otherwise.
int64_t parse_utc_instant(const std::string& s);

// "YYYY-MM-DDTHH:MM:SSZ" for an epoch timestamp.
std::string format_utc_instant(int64_t epoch_seconds);

std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);

// Shortest decimal form that round-trips a double; fixed across platforms
// so emitted CSV/JSON files are byte-stable for equal inputs.
std::string format_double(double v);

uint64_t fnv1a64(std::string_view bytes, uint64_t seed = 14695981039346656037ULL);

// FNV-1a over a file's contents; throws DataError if unreadable.
uint64_t digest_file(const std::string& path);

std::string hex64(uint64_t v);

// Minimal CSV support: fields never contain commas or newlines in any of
// our schemas, so quoting is not implemented.
struct CsvReader {
  explicit CsvReader(const std::string& path);
  // Returns false at end of file. Skips blank lines.
  bool next(std::vector<std::string>& fields);
  const std::string& header() const { return header_; }
  size_t line_number() const { return line_no_; }

 private:
  std::string path_;
  std::string header_;
  size_t line_no_ = 0;
  void* stream_;  // std::ifstream, kept out of the header
 public:
  ~CsvReader();
  CsvReader(const CsvReader&) = delete;
  CsvReader& operator=(const CsvReader&) = delete;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace tagdyn
