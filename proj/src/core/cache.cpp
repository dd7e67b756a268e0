#include "cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "canonical.hpp"

namespace homcount {

using nlohmann::json;

CacheSession::~CacheSession() {
    if (fd_ >= 0) {
        flock(fd_, LOCK_UN);
        close(fd_);
    }
}

void CacheSession::attach(const std::string& directory, MemoCache& memo) {
    if (fd_ >= 0) throw IntegrityError("cache already attached");
    path_ = directory + "/homcount-cache.jsonl";
    fd_ = open(path_.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0)
        throw ParseError("cannot open cache file " + path_ + ": " + std::strerror(errno));
    if (flock(fd_, LOCK_EX) != 0) {
        close(fd_);
        fd_ = -1;
        throw ParseError("cannot lock cache file " + path_);
    }

    std::ifstream in(path_);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("g") || !j.contains("h") || !j.contains("count"))
            throw IntegrityError("cache line " + std::to_string(lineNo) + " is malformed");
        MemoCache::Key key{Certificate::fromHex(j.at("g").get<std::string>()).bytes(),
                           Certificate::fromHex(j.at("h").get<std::string>()).bytes()};
        // insert() rejects a key that reappears with a different value.
        memo.insert(key, fromDecimal(j.at("count").get<std::string>()), /*fresh=*/false);
    }
}

void CacheSession::flush(const MemoCache& memo) {
    if (fd_ < 0 || flushed_) return;
    flushed_ = true;
    std::ostringstream out;
    for (const auto& entry : memo.freshEntries()) {
        json j;
        j["count"] = entry[2];
        j["g"] = entry[0];
        j["h"] = entry[1];
        out << j.dump() << '\n';
    }
    std::string data = out.str();
    if (data.empty()) return;
    if (lseek(fd_, 0, SEEK_END) < 0 ||
        write(fd_, data.data(), data.size()) != static_cast<ssize_t>(data.size()))
        throw ParseError("cache append failed for " + path_);
}

}  // namespace homcount
