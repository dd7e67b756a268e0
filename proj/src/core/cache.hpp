#ifndef HOMCOUNT_CORE_CACHE_HPP
#define HOMCOUNT_CORE_CACHE_HPP

#include <string>

#include "hom.hpp"

namespace homcount {

// Append-only JSON-lines store of per-component counts, one file per
// cache directory. The session takes an exclusive flock for its whole
// lifetime (single writer per run) and verifies on load that no line
// contradicts another.
class CacheSession {
public:
    CacheSession() = default;
    ~CacheSession();
    CacheSession(const CacheSession&) = delete;
    CacheSession& operator=(const CacheSession&) = delete;

    // Locks dir/homcount-cache.jsonl and loads its entries into the memo.
    void attach(const std::string& directory, MemoCache& memo);
    // Appends entries the engine computed this run. One shot: later calls
    // are no-ops so nothing is written twice.
    void flush(const MemoCache& memo);
    bool attached() const { return fd_ >= 0; }

private:
    int fd_ = -1;
    bool flushed_ = false;
    std::string path_;
};

}  // namespace homcount

#endif
