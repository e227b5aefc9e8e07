#pragma once

// Append-only checkpoint log for the parameter search.
//
//   ratmed-search-checkpoint v1 height=128 chunk_size=1024 chunks=5
//   chunk=3 candidates=812345 finds=1/3:2/5 crc=8c1f0a2d4b6e7f10
//   chunk=0 candidates=790001 finds=- crc=...
//
// One line per completed chunk, in completion order. `crc` is FNV-1a 64 of
// the line text before " crc=". A final line without its newline is a torn
// write and is dropped on load; any other malformed line is an error.

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ratmed/buchholz.hpp"

namespace ratmed {

struct CheckpointHeader {
    int height = 0;
    std::size_t chunk_size = 0;
    std::size_t chunks = 0;

    friend bool operator==(const CheckpointHeader&, const CheckpointHeader&) = default;
};

struct ChunkRecord {
    std::size_t id = 0;
    std::uint64_t candidates = 0;
    std::vector<ParamPoint> finds;

    friend bool operator==(const ChunkRecord&, const ChunkRecord&) = default;
};

std::uint64_t fnv1a64(std::string_view text);

std::string format_header(const CheckpointHeader& h);
std::string format_chunk_line(const ChunkRecord& r);

/// Throws ResumeError on any malformed or checksum-failing line.
CheckpointHeader parse_header(std::string_view line);
ChunkRecord parse_chunk_line(std::string_view line);

struct CheckpointState {
    CheckpointHeader header;
    /// Sorted by chunk id.
    std::vector<ChunkRecord> chunks;
    bool dropped_torn_tail = false;
};

/// Loads and validates a checkpoint against the expected header. Throws
/// ResumeError if the file is missing, belongs to a different search, or
/// contains a corrupt line, duplicate or out-of-range chunk id.
CheckpointState load_checkpoint(const std::filesystem::path& path, const CheckpointHeader& expected);

/// Single owner of the checkpoint file. Every append is one write() of a
/// complete line followed by fsync.
class CheckpointWriter {
public:
    /// Truncates `path` and writes the header.
    static CheckpointWriter create(const std::filesystem::path& path, const CheckpointHeader& header);
    /// Reopens an existing log for appending. A torn tail is cut off first.
    static CheckpointWriter reopen(const std::filesystem::path& path, const CheckpointState& state);

    CheckpointWriter(CheckpointWriter&& other) noexcept;
    CheckpointWriter& operator=(CheckpointWriter&&) = delete;
    CheckpointWriter(const CheckpointWriter&) = delete;
    ~CheckpointWriter();

    void append(const ChunkRecord& r);

private:
    explicit CheckpointWriter(int fd) : fd_(fd) {}

    int fd_ = -1;
    std::mutex mutex_;
};

/// Rewrites the log as header plus chunk lines sorted by id, via a temporary
/// file and rename.
void compact_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                        const std::vector<ChunkRecord>& chunks);

}  // namespace ratmed
