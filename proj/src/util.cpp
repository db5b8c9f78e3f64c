#include "tagdyn/util.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace tagdyn {

int64_t days_from_civil(int year, int month, int day) {
  year -= month <= 2;
  const int64_t era = (year >= 0 ? year : year - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(year - era * 400);
  const unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

static void civil_from_days(int64_t z, int& year, int& month, int& day) {
  z += 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int64_t y = static_cast<int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  year = static_cast<int>(y + (month <= 2));
}

int64_t parse_utc_date(const std::string& s) {
  int y, m, d;
  char tail;
  if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3 ||
      m < 1 || m > 12 || d < 1 || d > 31) {
    throw DataError("invalid date (expected YYYY-MM-DD): '" + s + "'");
  }
  return days_from_civil(y, m, d) * kSecondsPerDay;
}

int64_t parse_utc_instant(const std::string& s) {
  std::string_view v = trim(s);
  if (v.empty()) throw DataError("empty timestamp");
  bool digits = v[0] == '-' || std::isdigit(static_cast<unsigned char>(v[0]));
  for (size_t i = 1; digits && i < v.size(); ++i) {
    digits = std::isdigit(static_cast<unsigned char>(v[i]));
  }
  if (digits) {
    try {
      return std::stoll(std::string(v));
    } catch (const std::exception&) {
      throw DataError("invalid epoch timestamp: '" + s + "'");
    }
  }
  int y, mo, d, h, mi, se;
  char sep;
  int n = std::sscanf(std::string(v).c_str(), "%d-%d-%d%c%d:%d:%d",
                      &y, &mo, &d, &sep, &h, &mi, &se);
  if (n == 3) return parse_utc_date(std::string(v.substr(0, 10)));
  if (n == 7 && (sep == 'T' || sep == ' ') && mo >= 1 && mo <= 12 &&
      d >= 1 && d <= 31 && h >= 0 && h < 24 && mi >= 0 && mi < 60 &&
      se >= 0 && se < 61) {
    return days_from_civil(y, mo, d) * kSecondsPerDay + h * 3600 + mi * 60 + se;
  }
  throw DataError("invalid timestamp: '" + s + "'");
}

std::string format_utc_instant(int64_t t) {
  int64_t days = t / kSecondsPerDay;
  int64_t rem = t % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    days -= 1;
  }
  int y, m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02lld:%02lld:%02lldZ", y, m, d,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string format_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

uint64_t fnv1a64(std::string_view bytes, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file for digest: " + path);
  uint64_t h = 14695981039346656037ULL;
  char buf[65536];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    h = fnv1a64(std::string_view(buf, static_cast<size_t>(in.gcount())), h);
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

CsvReader::CsvReader(const std::string& path) : path_(path) {
  auto* in = new std::ifstream(path);
  stream_ = in;
  if (!*in) {
    delete in;
    stream_ = nullptr;
    throw DataError("cannot open CSV file: " + path);
  }
  if (!std::getline(*in, header_)) header_.clear();
  if (!header_.empty() && header_.back() == '\r') header_.pop_back();
  line_no_ = 1;
}

CsvReader::~CsvReader() { delete static_cast<std::ifstream*>(stream_); }

bool CsvReader::next(std::vector<std::string>& fields) {
  auto* in = static_cast<std::ifstream*>(stream_);
  std::string line;
  while (std::getline(*in, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fields = split(line, ',');
    return true;
  }
  return false;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw DataError("error writing file: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tagdyn
