// catalog.hpp -- persistent ledger of known code sizes.  Plain append-only
// text with POSIX file locking; exact entries are never displaced by smaller
// non-exact values.  Built-in formula values answer lookups even with an
// empty ledger.

#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <ctime>
#include <fstream>

#include "bounds.hpp"
#include "constructions.hpp"
#include "io.hpp"

namespace mcwc {

struct CatalogEntry {
    std::string key;          // canonical shape key
    std::string permutation;  // part order mapping canonical -> declared
    Int value;
    bool exact;
    std::string provenance;
    std::string timestamp;
};

/// Canonical key: parts sorted by (n_i, w_i); the sorting permutation is
/// reported separately since T is invariant under part reordering.
inline std::pair<std::string, std::string> catalog_key(const Shape& sh) {
    std::vector<int> idx(sh.parts());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::pair(sh.lengths()[a], sh.weights()[a]) <
               std::pair(sh.lengths()[b], sh.weights()[b]);
    });
    std::string n, w, perm;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) {
            n += ',';
            w += ',';
            perm += ',';
        }
        n += std::to_string(sh.lengths()[idx[i]]);
        w += std::to_string(sh.weights()[idx[i]]);
        perm += std::to_string(idx[i]);
    }
    return {"n=" + n + ";w=" + w + ";d=" + std::to_string(sh.distance()), perm};
}

namespace detail {

inline std::string now_string() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&t));
    return buf;
}

/// Returns true when b should replace a.
inline bool catalog_better(const CatalogEntry& a, const CatalogEntry& b) {
    if (a.exact != b.exact) return b.exact;
    return b.value > a.value;
}

}  // namespace detail

class Catalog {
  public:
    explicit Catalog(std::string path) : path_(std::move(path)) {}

    /// Best known value for the shape: built-in formulas plus the ledger.
    std::optional<CatalogEntry> lookup(const Shape& sh) const {
        auto [key, perm] = catalog_key(sh);
        std::optional<CatalogEntry> best = builtin(sh, key, perm);
        for (const auto& e : load())
            if (e.key == key && (!best || detail::catalog_better(*best, e))) best = e;
        return best;
    }

    void record(const Shape& sh, const Int& value, bool exact, const std::string& provenance) {
        auto [key, perm] = catalog_key(sh);
        CatalogEntry e{key, perm, value, exact, provenance, detail::now_string()};
        if (auto prev = lookup(sh); prev && prev->exact && (!exact || value < prev->value))
            return;  // exact entries are never overwritten by weaker data
        append(e);
    }

    /// Rewrites the ledger keeping only the best entry per key.
    void compact() {
        std::map<std::string, CatalogEntry> best;
        for (const auto& e : load()) {
            auto it = best.find(e.key);
            if (it == best.end() || detail::catalog_better(it->second, e)) best[e.key] = e;
        }
        int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT, 0644);
        if (fd < 0) throw std::runtime_error("catalog: cannot open " + path_);
        ::flock(fd, LOCK_EX);
        std::string out;
        for (const auto& [k, e] : best) out += format(e);
        if (::ftruncate(fd, 0) != 0 ||
            ::write(fd, out.data(), out.size()) != static_cast<ssize_t>(out.size())) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
            throw std::runtime_error("catalog: rewrite failed");
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
    }

    std::vector<CatalogEntry> load() const {
        std::vector<CatalogEntry> out;
        std::ifstream is(path_);
        if (!is) return out;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            CatalogEntry e;
            std::string value, exact;
            if (!(ls >> e.key >> e.permutation >> value >> exact >> e.provenance)) continue;
            ls >> e.timestamp;
            e.value = Int(value);
            e.exact = exact == "exact";
            out.push_back(std::move(e));
        }
        return out;
    }

  private:
    static std::string format(const CatalogEntry& e) {
        return e.key + " " + e.permutation + " " + e.value.str() + " " +
               (e.exact ? "exact" : "lower-bound") + " " + e.provenance + " " + e.timestamp + "\n";
    }

    void append(const CatalogEntry& e) {
        int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
        if (fd < 0) throw std::runtime_error("catalog: cannot open " + path_);
        ::flock(fd, LOCK_EX);
        std::string line = format(e);
        if (::write(fd, line.data(), line.size()) != static_cast<ssize_t>(line.size())) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
            throw std::runtime_error("catalog: append failed");
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
    }

    /// Formula-backed exact values available without any ledger.
    static std::optional<CatalogEntry> builtin(const Shape& sh, const std::string& key,
                                               const std::string& perm) {
        if (auto t = trivial_exact(sh))
            return CatalogEntry{key, perm, t->value, true, "formula/" + to_string(t->method), ""};
        // total weight 4, distance 4: the k=4 generalized packing numbers
        if (sh.total_weight() == 4 && sh.distance() == 4) {
            std::vector<int> idx(sh.parts());
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
                return sh.weights()[a] != sh.weights()[b] ? sh.weights()[a] > sh.weights()[b]
                                                          : sh.lengths()[a] < sh.lengths()[b];
            });
            std::vector<int> lengths, comp;
            for (int i : idx) {
                if (sh.weights()[i] == 0) continue;
                lengths.push_back(sh.lengths()[i]);
                comp.push_back(sh.weights()[i]);
            }
            try {
                BoundResult b = k4_packing_number(lengths, comp);
                return CatalogEntry{key, perm, b.value, true, "paper/search", ""};
            } catch (const std::exception&) {
            }
        }
        if (sh.is_uniform() && sh.distance() == 4) {
            const int m = sh.parts(), n = sh.lengths()[0], w = sh.weights()[0];
            if (w == 2 && n >= 2) {
                Int v = 1;
                for (int i = 0; i < m - 1; ++i) v *= binomial(n, 2);
                v *= n / 2;
                return CatalogEntry{key, perm, v, true, "formula/w2d4", ""};
            }
            const int mod = n % 6;
            if (w == 3 && n >= 4 && (mod == 0 || mod == 1 || mod == 2 || mod == 3) && n != 6 &&
                n != 7) {
                Int v = 1;
                for (int i = 0; i < m - 1; ++i) v *= binomial(n, 3);
                v *= Int(n) * ((n - 1) / 2) / 3;
                return CatalogEntry{key, perm, v, true, "formula/w3d4", ""};
            }
            if (w == 1) {
                Int v = 1;
                for (int i = 0; i < m - 1; ++i) v *= n;
                return CatalogEntry{key, perm, v, true, "formula/w1d4", ""};
            }
        }
        return std::nullopt;
    }

    std::string path_;
};

}  // namespace mcwc
