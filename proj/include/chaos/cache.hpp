#ifndef CHAOS_CACHE_HPP
#define CHAOS_CACHE_HPP

/* Append-only JSON-lines cache for moment results, keyed by
 * (beta, N, n, tol).  A hit replays the stored record verbatim, so repeated
 * runs are bit-identical.  Location: CHAOS_CACHE_DIR or ./.chaos-cache. */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "moments.hpp"

namespace chaos {

inline std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("CHAOS_CACHE_DIR"))
        return std::filesystem::path(env);
    return std::filesystem::path(".chaos-cache");
}

class MomentCache {
  public:
    explicit MomentCache(std::filesystem::path dir = cache_dir())
        : file_(dir / "moments.jsonl") {
        std::filesystem::create_directories(dir);
    }

    std::optional<nlohmann::json> lookup(double beta, int N, Part n, double tol) const {
        std::ifstream in(file_);
        if (!in) return std::nullopt;
        std::string line;
        std::optional<nlohmann::json> found;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            if (j.value("beta", 0.0) == beta && j.value("N", -1) == N &&
                j.value("n", Part{-1}) == n && j.value("tol", 0.0) == tol)
                found = j;  // last write wins
        }
        return found;
    }

    void append(const nlohmann::json& record) const {
        std::ofstream out(file_, std::ios::app);
        out << record.dump() << "\n";
    }

    const std::filesystem::path& file() const { return file_; }

  private:
    std::filesystem::path file_;
};

}  // namespace chaos

#endif
