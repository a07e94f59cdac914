#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "acgt/service/codec.hpp"
#include "acgt/workflow/portal.hpp"

namespace acgt::service {

// Points at which a test hook may abort a commit.
enum class CommitStage {
  journal_written,  // record durable, no document touched yet
  document_written, // after each applied document
  applied,          // every document written, record not yet removed
};

// Thrown by crash hooks to stop a commit dead, as a killed process would.
struct SimulatedCrash : std::runtime_error {
  SimulatedCrash() : std::runtime_error("simulated crash") {}
};

// Document-per-entity store under a root directory.
//
// A commit writes one journal record (journal/<seq>.rec) listing every
// changed document, applies the documents one by one (write temp, rename),
// then deletes the record. Opening a store replays leftover records, so a
// crash at any point yields the state before or after the commit.
//
// Readers take immutable snapshots; writers are serialized.
class Store {
 public:
  using Snapshot = std::shared_ptr<const workflow::PortalState>;
  using CrashHook = std::function<void(CommitStage, std::size_t documents_done)>;

  explicit Store(std::filesystem::path root);

  const std::filesystem::path& root() const noexcept { return root_; }
  Snapshot snapshot() const;

  // Runs `change` on a copy of the current state and commits the result.
  // If `change` throws, nothing is written and the exception propagates.
  void mutate(const std::function<void(workflow::PortalState&)>& change);

  // Replaces the whole state (seed, restore).
  void reset(workflow::PortalState state);

  bool empty() const;
  std::uint64_t commits() const noexcept { return seq_; }

  void set_crash_hook(CrashHook hook) { crash_hook_ = std::move(hook); }

 private:
  void recover();
  void commit(const Documents& next);

  std::filesystem::path root_;
  mutable std::mutex snapshot_mutex_;
  std::mutex writer_mutex_;
  Snapshot current_;
  Documents docs_;
  std::uint64_t seq_ = 0;
  CrashHook crash_hook_;
};

// Writes `content` to `path` through a sibling temp file and a rename,
// flushing both the file and its directory.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace acgt::service
