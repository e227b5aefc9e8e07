#include "ratmed/checkpoint.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ratmed/error.hpp"

namespace ratmed {

namespace {

constexpr std::string_view kMagic = "ratmed-search-checkpoint v1";

std::string hex16(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view field(std::string_view token, std::string_view key, std::string_view line) {
    if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=')
        throw ResumeError("checkpoint line lacks '" + std::string(key) + "=': " + std::string(line));
    return token.substr(key.size() + 1);
}

std::uint64_t parse_u64(std::string_view text, std::string_view line) {
    if (text.empty() || text.size() > 19 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ResumeError("bad number in checkpoint line: " + std::string(line));
    return std::stoull(std::string(text));
}

void write_all(int fd, std::string_view data, const std::filesystem::path& path) {
    while (!data.empty()) {
        const ssize_t n = ::write(fd, data.data(), data.size());
        if (n < 0) {
            if (errno == EINTR) continue;
            throw Error("write to " + path.string() + " failed: " + std::strerror(errno));
        }
        data.remove_prefix(static_cast<std::size_t>(n));
    }
}

int open_or_throw(const std::filesystem::path& path, int flags) {
    const int fd = ::open(path.c_str(), flags, 0644);
    if (fd < 0) throw Error("cannot open " + path.string() + ": " + std::strerror(errno));
    return fd;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string format_header(const CheckpointHeader& h) {
    std::ostringstream os;
    os << kMagic << " height=" << h.height << " chunk_size=" << h.chunk_size << " chunks=" << h.chunks;
    return os.str();
}

std::string format_chunk_line(const ChunkRecord& r) {
    std::string body = "chunk=" + std::to_string(r.id) + " candidates=" + std::to_string(r.candidates) + " finds=";
    if (r.finds.empty()) body += "-";
    for (std::size_t i = 0; i < r.finds.size(); ++i) {
        if (i) body += ",";
        body += r.finds[i].theta.to_string() + ":" + r.finds[i].phi.to_string();
    }
    return body + " crc=" + hex16(fnv1a64(body));
}

CheckpointHeader parse_header(std::string_view line) {
    if (line.substr(0, kMagic.size()) != kMagic)
        throw ResumeError("not a search checkpoint: " + std::string(line.substr(0, 80)));
    const auto parts = split(line.substr(kMagic.size()), ' ');
    if (parts.size() != 4 || !parts[0].empty()) throw ResumeError("malformed checkpoint header: " + std::string(line));
    CheckpointHeader h;
    h.height = static_cast<int>(parse_u64(field(parts[1], "height", line), line));
    h.chunk_size = parse_u64(field(parts[2], "chunk_size", line), line);
    h.chunks = parse_u64(field(parts[3], "chunks", line), line);
    return h;
}

ChunkRecord parse_chunk_line(std::string_view line) {
    const auto crc_pos = line.rfind(" crc=");
    if (crc_pos == std::string_view::npos) throw ResumeError("checkpoint line without checksum: " + std::string(line));
    const std::string_view body = line.substr(0, crc_pos);
    if (line.substr(crc_pos + 5) != hex16(fnv1a64(body)))
        throw ResumeError("checkpoint checksum mismatch: " + std::string(line));
    const auto parts = split(body, ' ');
    if (parts.size() != 3) throw ResumeError("malformed checkpoint line: " + std::string(line));
    ChunkRecord r;
    r.id = parse_u64(field(parts[0], "chunk", line), line);
    r.candidates = parse_u64(field(parts[1], "candidates", line), line);
    const std::string_view finds = field(parts[2], "finds", line);
    if (finds != "-") {
        for (auto item : split(finds, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string_view::npos) throw ResumeError("malformed find in checkpoint: " + std::string(line));
            try {
                r.finds.push_back({Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1))});
            } catch (const DomainError&) {
                throw ResumeError("malformed find in checkpoint: " + std::string(line));
            }
        }
    }
    return r;
}

CheckpointState load_checkpoint(const std::filesystem::path& path, const CheckpointHeader& expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResumeError("cannot resume: checkpoint " + path.string() + " does not exist");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CheckpointState state;
    auto lines = split(text, '\n');
    // split() leaves "" after a final newline; anything else there is torn.
    if (!lines.back().empty()) state.dropped_torn_tail = true;
    lines.pop_back();
    if (lines.empty()) throw ResumeError("checkpoint " + path.string() + " has no complete header line");
    state.header = parse_header(lines.front());
    if (!(state.header == expected))
        throw ResumeError("checkpoint " + path.string() + " belongs to a different search (" +
                          format_header(state.header) + ")");
    std::vector<bool> seen(expected.chunks, false);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        ChunkRecord r = parse_chunk_line(lines[i]);
        if (r.id >= expected.chunks) throw ResumeError("checkpoint chunk id out of range: " + std::string(lines[i]));
        if (seen[r.id]) throw ResumeError("checkpoint repeats chunk " + std::to_string(r.id));
        seen[r.id] = true;
        state.chunks.push_back(std::move(r));
    }
    std::sort(state.chunks.begin(), state.chunks.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return state;
}

CheckpointWriter CheckpointWriter::create(const std::filesystem::path& path, const CheckpointHeader& header) {
    const int fd = open_or_throw(path, O_WRONLY | O_CREAT | O_TRUNC | O_APPEND);
    CheckpointWriter w(fd);
    write_all(fd, format_header(header) + "\n", path);
    ::fsync(fd);
    return w;
}

CheckpointWriter CheckpointWriter::reopen(const std::filesystem::path& path, const CheckpointState& state) {
    if (state.dropped_torn_tail) {
        // Rewrite without the torn line so new appends start on a fresh line.
        compact_checkpoint(path, state.header, state.chunks);
    }
    return CheckpointWriter(open_or_throw(path, O_WRONLY | O_APPEND));
}

CheckpointWriter::CheckpointWriter(CheckpointWriter&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }

CheckpointWriter::~CheckpointWriter() {
    if (fd_ >= 0) ::close(fd_);
}

void CheckpointWriter::append(const ChunkRecord& r) {
    const std::string line = format_chunk_line(r) + "\n";
    std::lock_guard lock(mutex_);
    write_all(fd_, line, "checkpoint");
    ::fsync(fd_);
}

void compact_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                        const std::vector<ChunkRecord>& chunks) {
    std::vector<const ChunkRecord*> sorted;
    for (const auto& c : chunks) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(), [](const auto* x, const auto* y) { return x->id < y->id; });
    std::string text = format_header(header) + "\n";
    for (const auto* c : sorted) text += format_chunk_line(*c) + "\n";

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    const int fd = open_or_throw(tmp, O_WRONLY | O_CREAT | O_TRUNC);
    try {
        write_all(fd, text, tmp);
    } catch (...) {
        ::close(fd);
        throw;
    }
    ::fsync(fd);
    ::close(fd);
    std::filesystem::rename(tmp, path);
}

}  // namespace ratmed
