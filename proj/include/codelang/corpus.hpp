#ifndef CODELANG_CORPUS_HPP
#define CODELANG_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <openssl/evp.h>

#include "codelang/token.hpp"

namespace codelang {

namespace fs = std::filesystem;

/// Hex SHA-256 of a byte string.
inline std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("error while reading " + path.string());
  return ss.str();
}

struct SampleRecord {
  std::string path;
  std::string language;
  std::string repo;
  std::string hash;
  std::uint64_t size = 0;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct CorpusManifest {
  std::vector<SampleRecord> records;
  std::vector<std::string> warnings;

  /// Sorted distinct labels.
  std::vector<std::string> languages() const {
    std::set<std::string> s;
    for (const auto& r : records) s.insert(r.language);
    return {s.begin(), s.end()};
  }

  /// Digest over (hash, language) pairs in record order.
  std::string digest() const {
    std::string acc;
    for (const auto& r : records) acc += r.hash + '\t' + r.language + '\n';
    return sha256_hex(acc);
  }
};

struct CorpusRoot {
  fs::path directory;
  std::string language;
};

struct IngestOptions {
  std::uint64_t min_bytes = 3;
  std::uint64_t max_bytes = 240000;
};

namespace detail {

struct Candidate {
  std::string path;
  std::string language;
  std::string repo;
};

inline CorpusManifest finish_ingest(const std::vector<Candidate>& candidates,
                                    const std::vector<std::string>& declared, const IngestOptions& opt) {
  if (opt.min_bytes > opt.max_bytes) throw Error("min-bytes exceeds max-bytes");
  CorpusManifest m;
  std::set<std::string> seen;
  for (const auto& c : candidates) {
    std::error_code ec;
    const auto size = fs::file_size(c.path, ec);
    if (ec) {
      m.warnings.push_back("skipping unreadable file " + c.path + ": " + ec.message());
      continue;
    }
    if (size < opt.min_bytes || size > opt.max_bytes) continue;
    std::string bytes;
    try {
      bytes = read_file(c.path);
    } catch (const Error& e) {
      m.warnings.push_back(std::string("skipping ") + e.what());
      continue;
    }
    std::string hash = sha256_hex(bytes);
    if (!seen.insert(hash).second) continue;
    m.records.push_back({c.path, c.language, c.repo, std::move(hash), bytes.size()});
  }
  std::map<std::string, std::size_t> per_lang;
  for (const auto& r : m.records) ++per_lang[r.language];
  for (const auto& lang : declared)
    if (per_lang[lang] == 0) throw Error("no usable files for language '" + lang + "'");
  return m;
}

}  // namespace detail

/// Walks each root directory (sorted path order, roots in the given order),
/// drops files outside the size window, and removes byte-identical
/// duplicates keeping the first occurrence. A file's repo id is its label
/// plus the first path component under the root.
inline CorpusManifest ingest(const std::vector<CorpusRoot>& roots, const IngestOptions& opt = {}) {
  std::vector<detail::Candidate> candidates;
  std::vector<std::string> declared;
  std::vector<std::string> warnings;
  for (const auto& root : roots) {
    if (!fs::is_directory(root.directory))
      throw Error("corpus root " + root.directory.string() + " is not a readable directory");
    declared.push_back(root.language);
    std::vector<fs::path> files;
    std::error_code ec;
    for (fs::recursive_directory_iterator it(root.directory, fs::directory_options::skip_permission_denied, ec),
         end;
         it != end; it.increment(ec)) {
      if (ec) {
        warnings.push_back("walk error under " + root.directory.string() + ": " + ec.message());
        break;
      }
      if (it->is_regular_file(ec)) files.push_back(it->path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const fs::path rel = f.lexically_relative(root.directory);
      auto first = rel.begin();
      std::string repo = std::next(first) == rel.end() ? std::string(".") : first->string();
      candidates.push_back({f.string(), root.language, root.language + "/" + repo});
    }
  }
  CorpusManifest m = detail::finish_ingest(candidates, declared, opt);
  m.warnings.insert(m.warnings.begin(), warnings.begin(), warnings.end());
  return m;
}

/// Every subdirectory of `dir` is one language, named after the directory.
inline std::vector<CorpusRoot> roots_from_directory(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(dir.string() + " is not a directory");
  std::vector<CorpusRoot> roots;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_directory()) roots.push_back({e.path(), e.path().filename().string()});
  std::sort(roots.begin(), roots.end(),
            [](const CorpusRoot& a, const CorpusRoot& b) { return a.language < b.language; });
  if (roots.empty()) throw Error("no language directories under " + dir.string());
  return roots;
}

/// Manifest lines: `repo_id TAB language TAB path`. Relative paths resolve
/// against the manifest's directory. Blank lines and `#` lines are ignored.
inline CorpusManifest ingest_manifest(const fs::path& manifest, const IngestOptions& opt = {}) {
  std::ifstream in(manifest);
  if (!in) throw Error("cannot open manifest " + manifest.string());
  std::vector<detail::Candidate> candidates;
  std::vector<std::string> declared;
  std::set<std::string> declared_set;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw Error(manifest.string() + ":" + std::to_string(lineno) + ": expected repo_id<TAB>language<TAB>path");
    std::string repo = line.substr(0, t1);
    std::string lang = line.substr(t1 + 1, t2 - t1 - 1);
    fs::path p = line.substr(t2 + 1);
    if (p.is_relative()) p = manifest.parent_path() / p;
    if (declared_set.insert(lang).second) declared.push_back(lang);
    candidates.push_back({p.string(), lang, repo});
  }
  return detail::finish_ingest(candidates, declared, opt);
}

inline void write_manifest(std::ostream& os, const CorpusManifest& m) {
  for (const auto& r : m.records) os << r.repo << '\t' << r.language << '\t' << r.path << '\n';
}

struct SplitResult {
  CorpusManifest train;
  CorpusManifest test;
  std::vector<std::string> untestable;  // languages with a single repo
  std::vector<std::string> warnings;
};

/// Repository-granular train/test split. Per language (sorted), repos are
/// shuffled with a seeded generator and assigned to train until the train
/// side holds at least `train_fraction` of that language's files; the rest go
/// to test. A language with two or more repos always keeps at least one
/// repo on the test side.
inline SplitResult split(const CorpusManifest& manifest, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) throw Error("train fraction must be in (0, 1)");

  // language -> repo -> file count
  std::map<std::string, std::map<std::string, std::size_t>> by_lang;
  for (const auto& r : manifest.records) ++by_lang[r.language][r.repo];

  std::mt19937_64 rng(seed);
  std::map<std::string, bool> to_train;  // repo -> side
  SplitResult out;
  for (const auto& [lang, repos] : by_lang) {
    std::size_t total = 0;
    std::vector<std::pair<std::string, std::size_t>> order(repos.begin(), repos.end());
    for (const auto& [_, c] : order) total += c;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

    if (order.size() == 1) {
      out.untestable.push_back(lang);
      out.warnings.push_back("language '" + lang + "' has a single repository; all its files go to training");
    }
    const double target = train_fraction * static_cast<double>(total);
    std::size_t train_files = 0;
    bool any_test = false;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& [repo, count] = order[k];
      auto it = to_train.find(repo);
      if (it == to_train.end()) {
        const bool last = k + 1 == order.size();
        bool train = static_cast<double>(train_files) < target;
        if (train && last && !any_test && order.size() > 1) train = false;
        it = to_train.emplace(repo, train).first;
      }
      if (it->second)
        train_files += count;
      else
        any_test = true;
    }
  }
  for (const auto& r : manifest.records) (to_train.at(r.repo) ? out.train : out.test).records.push_back(r);
  return out;
}

}  // namespace codelang

#endif  // CODELANG_CORPUS_HPP
