// brauer - diagram semigroups and complexity bounds

#include "brauer/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace brauer {

  namespace {

    constexpr char const* MAGIC = "# brauer-cache v";

    std::string hex64(std::uint64_t x) {
      char buf[17];
      std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
      return buf;
    }

    class LineReader {
     public:
      explicit LineReader(std::string const& text) : _in(text) {}

      std::string next() {
        std::string line;
        if (!std::getline(_in, line)) {
          throw ParseError("unexpected end of cache file", _line);
        }
        ++_line;
        return line;
      }

      // "key value" -> value
      std::string field(std::string const& key) {
        auto line = next();
        if (line.rfind(key + " ", 0) != 0) {
          throw ParseError("expected '" + key + "'", _line);
        }
        return line.substr(key.size() + 1);
      }

      std::size_t number(std::string const& key) {
        auto value = field(key);
        try {
          std::size_t used = 0;
          auto        x    = std::stoull(value, &used);
          if (used != value.size()) {
            throw std::invalid_argument(value);
          }
          return x;
        } catch (std::exception const&) {
          throw ParseError("malformed number for '" + key + "'", _line);
        }
      }

      std::size_t line() const noexcept {
        return _line;
      }

     private:
      std::istringstream _in;
      std::size_t        _line = 0;
    };

  }  // namespace

  std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::string serialize_cache(FamilyInstance const& instance) {
    std::ostringstream os;
    os << MAGIC << CACHE_FORMAT_VERSION << '\n';
    os << "family " << to_string(instance.family) << '\n';
    os << "degree " << instance.degree << '\n';
    os << "strategy " << to_string(instance.strategy) << '\n';
    os << "generators " << instance.generators.size() << '\n';
    for (auto const& d : instance.generators) {
      os << encode(d) << '\n';
    }
    os << "elements " << instance.elements.size() << '\n';
    for (auto const& d : instance.elements) {
      os << encode(d) << '\n';
    }
    std::string body = os.str();
    return body + "checksum " + hex64(fnv1a64(body)) + '\n';
  }

  FamilyInstance parse_cache(std::string const& text) {
    auto first = text.substr(0, text.find('\n'));
    if (first.rfind(MAGIC, 0) != 0) {
      throw ParseError("not a brauer cache file", 0);
    }
    if (first != MAGIC + std::to_string(CACHE_FORMAT_VERSION)) {
      throw VersionMismatch("cache format '" + first.substr(2)
                            + "' differs from v"
                            + std::to_string(CACHE_FORMAT_VERSION)
                            + "; rebuild the cache");
    }
    auto where = text.rfind("checksum ");
    if (where == std::string::npos || (where > 0 && text[where - 1] != '\n')) {
      throw ChecksumMismatch("cache file has no checksum line");
    }
    auto stated = text.substr(where + 9);
    while (!stated.empty() && (stated.back() == '\n' || stated.back() == '\r')) {
      stated.pop_back();
    }
    if (stated != hex64(fnv1a64(std::string_view(text).substr(0, where)))) {
      throw ChecksumMismatch("cache checksum does not match its contents");
    }

    LineReader     in(text.substr(0, where));
    FamilyInstance out{};
    in.next();
    try {
      out.family = family_from_string(in.field("family"));
    } catch (BadIndex const&) {
      throw ParseError("unknown family", in.line());
    }
    out.degree = in.number("degree");
    if (out.degree == 0 || out.degree > MAX_DEGREE) {
      throw ParseError("degree out of range", in.line());
    }
    try {
      out.strategy = strategy_from_string(in.field("strategy"));
    } catch (BadIndex const&) {
      throw ParseError("unknown strategy", in.line());
    }
    auto read_diagrams = [&](std::string const& key) {
      std::vector<Diagram> v(in.number(key));
      for (auto& d : v) {
        auto line = in.next();
        try {
          d = decode(line, out.degree);
        } catch (Error const&) {
          throw ParseError("malformed diagram '" + line + "'", in.line());
        }
      }
      return v;
    };
    out.generators = read_diagrams("generators");
    out.elements   = read_diagrams("elements");
    if (!std::is_sorted(out.elements.begin(), out.elements.end())) {
      throw ParseError("elements are not sorted", in.line());
    }
    return out;
  }

  void save_cache(FamilyInstance const& instance, std::filesystem::path const& path) {
    std::error_code ec;
    if (path.has_parent_path()) {
      std::filesystem::create_directories(path.parent_path(), ec);
      if (ec) {
        throw Error("cannot create cache directory " + path.parent_path().string() + ": "
                    + ec.message());
      }
    }
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << serialize_cache(instance);
      out.flush();
      if (!out) {
        throw Error("cannot write cache file " + tmp.string());
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw Error("cannot write cache file " + path.string());
    }
  }

  FamilyInstance load_cache(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read cache file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cache(buf.str());
  }

  std::string cache_file_name(FamilyId f, std::size_t n) {
    return std::string(to_string(f)) + "-" + std::to_string(n) + ".cache";
  }

  std::filesystem::path default_cache_dir() {
    if (char const* env = std::getenv("BRAUER_CACHE_DIR"); env && *env) {
      return env;
    }
    return ".brauer-cache";
  }

  FamilyInstance load_or_build(FamilyId                     f,
                               std::size_t                  n,
                               std::filesystem::path const& dir,
                               std::size_t                  budget,
                               bool*                        from_cache) {
    auto const path = dir / cache_file_name(f, n);
    if (from_cache) {
      *from_cache = false;
    }
    if (std::filesystem::exists(path)) {
      try {
        auto cached = load_cache(path);
        if (cached.family != f || cached.degree != n) {
          throw ParseError("cache file holds another family", 2);
        }
        if (from_cache) {
          *from_cache = true;
        }
        return cached;
      } catch (VersionMismatch const&) {
        // Rebuilt below.
      }
    }
    auto built = construct(f, n, budget);
    save_cache(built, path);
    return built;
  }

}  // namespace brauer
