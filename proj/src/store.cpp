#include "acgt/service/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace acgt::service {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kTmpSuffix = ".tmp";
constexpr std::string_view kRecordSuffix = ".rec";

[[noreturn]] void io_fail(const std::string& what, const fs::path& p) {
  throw Error(Errc::io_error, what + " " + p.string() + ": " + std::strerror(errno));
}

void fsync_path(const fs::path& p, bool directory) {
  int fd = ::open(p.c_str(), directory ? O_RDONLY | O_DIRECTORY : O_RDONLY);
  if (fd < 0) io_fail("open", p);
  ::fsync(fd);
  ::close(fd);
}

bool is_state_document(const std::string& rel) {
  return rel.rfind("journal/", 0) != 0 && rel != "tokens.tsv";
}

Json record_json(std::uint64_t seq, const Documents& writes, const std::vector<std::string>& deletes) {
  return {{"seq", seq}, {"writes", writes}, {"deletes", deletes}};
}

void apply_record(const fs::path& root, const Json& rec,
                  const std::function<void(std::size_t)>& after_each = {}) {
  std::size_t done = 0;
  for (const auto& [rel, content] : rec.at("writes").items()) {
    write_file_atomic(root / rel, content.get<std::string>());
    if (after_each) after_each(++done);
  }
  for (const auto& rel : rec.at("deletes")) {
    std::error_code ec;
    fs::remove(root / rel.get<std::string>(), ec);
    if (after_each) after_each(++done);
  }
}

std::uint64_t record_seq(const fs::path& p) {
  auto stem = p.stem().string();
  if (stem.empty() || stem.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::io_error, "stray journal file " + p.string());
  return std::stoull(stem);
}

}  // namespace

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += kTmpSuffix;
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) io_fail("create", tmp);
  const char* data = content.data();
  std::size_t left = content.size();
  while (left > 0) {
    auto n = ::write(fd, data, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      io_fail("write", tmp);
    }
    data += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    io_fail("fsync", tmp);
  }
  ::close(fd);
  if (::rename(tmp.c_str(), path.c_str()) != 0) io_fail("rename", tmp);
  fsync_path(path.parent_path(), true);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Store::Store(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_ / "journal");
  recover();
}

void Store::recover() {
  // Temp files belong to writes that never reached their rename.
  for (const auto& entry : fs::recursive_directory_iterator(root_))
    if (entry.is_regular_file() && entry.path().extension() == kTmpSuffix) fs::remove(entry.path());

  std::vector<fs::path> records;
  for (const auto& entry : fs::directory_iterator(root_ / "journal"))
    if (entry.path().extension() == kRecordSuffix) records.push_back(entry.path());
  std::sort(records.begin(), records.end(),
            [](const fs::path& a, const fs::path& b) { return record_seq(a) < record_seq(b); });
  for (const auto& rec : records) {
    Json j;
    try {
      j = Json::parse(read_file(rec));
    } catch (const Json::exception& e) {
      throw Error(Errc::io_error, "corrupt journal record " + rec.string() + ": " + e.what());
    }
    apply_record(root_, j);
    seq_ = std::max(seq_, j.at("seq").get<std::uint64_t>());
    fs::remove(rec);
  }

  Documents docs;
  for (const auto& entry : fs::recursive_directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    auto rel = fs::relative(entry.path(), root_).generic_string();
    if (is_state_document(rel)) docs[rel] = read_file(entry.path());
  }
  auto state = decode_state(docs);
  docs_ = encode_state(state);
  current_ = std::make_shared<const workflow::PortalState>(std::move(state));
}

Store::Snapshot Store::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return current_;
}

bool Store::empty() const { return snapshot()->pages.empty() && snapshot()->corpus.size() == 0; }

void Store::commit(const Documents& next) {
  Documents writes;
  std::vector<std::string> deletes;
  for (const auto& [rel, content] : next) {
    auto it = docs_.find(rel);
    if (it == docs_.end() || it->second != content) writes[rel] = content;
  }
  for (const auto& [rel, content] : docs_)
    if (!next.count(rel)) deletes.push_back(rel);
  if (writes.empty() && deletes.empty()) return;

  auto seq = seq_ + 1;
  auto rec_path = root_ / "journal" / (std::to_string(seq) + std::string(kRecordSuffix));
  write_file_atomic(rec_path, record_json(seq, writes, deletes).dump());
  seq_ = seq;
  if (crash_hook_) crash_hook_(CommitStage::journal_written, 0);
  apply_record(root_, record_json(seq, writes, deletes), [&](std::size_t done) {
    if (crash_hook_) crash_hook_(CommitStage::document_written, done);
  });
  if (crash_hook_) crash_hook_(CommitStage::applied, writes.size() + deletes.size());
  fs::remove(rec_path);
  docs_ = next;
}

void Store::mutate(const std::function<void(workflow::PortalState&)>& change) {
  std::lock_guard writer(writer_mutex_);
  workflow::PortalState next = *snapshot();
  change(next);
  commit(encode_state(next));
  auto snap = std::make_shared<const workflow::PortalState>(std::move(next));
  std::lock_guard lock(snapshot_mutex_);
  current_ = std::move(snap);
}

void Store::reset(workflow::PortalState state) {
  mutate([&](workflow::PortalState& s) { s = std::move(state); });
}

}  // namespace acgt::service
