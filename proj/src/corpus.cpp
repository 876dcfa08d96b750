#include "revagg/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "revagg/errors.hpp"
#include "revagg/util.hpp"

namespace revagg {

using nlohmann::json;

std::optional<Decision> normalize_decision(std::string_view raw) {
  std::string lowered = to_lower(raw);
  if (lowered.find("accept") != std::string::npos) return Decision::Accept;
  if (lowered.find("reject") != std::string::npos) return Decision::Reject;
  return std::nullopt;
}

const char* to_string(Decision d) {
  return d == Decision::Accept ? "Accept" : "Reject";
}

namespace {

std::string get_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) return "";
  return it->get<std::string>();
}

// Venue score fields are strings like "7: Good paper"; the leading integer is
// the score.
std::optional<int> parse_leading_int(const std::string& raw) {
  std::size_t i = 0;
  while (i < raw.size() && is_ascii_space(raw[i])) ++i;
  std::size_t start = i;
  if (i < raw.size() && (raw[i] == '-' || raw[i] == '+')) ++i;
  std::size_t digits_start = i;
  while (i < raw.size() && raw[i] >= '0' && raw[i] <= '9') ++i;
  if (i == digits_start) return std::nullopt;
  try {
    return std::stoi(raw.substr(start, i - start));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct RawNote {
  std::string id;
  std::string forum;
  std::string replyto;
  json content;
  std::size_t line = 0;
  std::size_t byte_offset = 0;
};

}  // namespace

ParsedDump parse_openreview_dump(std::istream& in, OnBadJson mode) {
  ParsedDump result;
  std::vector<RawNote> papers_raw;
  std::vector<RawNote> replies;

  std::string line;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (trim(line).empty()) continue;

    json note;
    try {
      note = json::parse(line);
    } catch (const json::parse_error& e) {
      // e.byte is 1-based within the line
      std::size_t at = line_offset + (e.byte > 0 ? e.byte - 1 : 0);
      if (mode == OnBadJson::Throw) {
        throw ParseError("malformed JSON on line " + std::to_string(line_no),
                         at);
      }
      result.rejects.push_back({line_no, line_offset, "", "malformed_json"});
      continue;
    }
    if (!note.is_object()) {
      if (mode == OnBadJson::Throw) {
        throw ParseError("line " + std::to_string(line_no) +
                             " is not a JSON object",
                         line_offset);
      }
      result.rejects.push_back({line_no, line_offset, "", "not_an_object"});
      continue;
    }

    RawNote raw;
    raw.id = get_string(note, "id");
    raw.forum = get_string(note, "forum");
    raw.replyto = get_string(note, "replyto");
    raw.content = note.contains("content") && note["content"].is_object()
                      ? note["content"]
                      : json::object();
    raw.line = line_no;
    raw.byte_offset = line_offset;

    if (raw.id.empty()) {
      result.rejects.push_back({line_no, line_offset, "", "missing_id"});
      continue;
    }
    bool is_paper = raw.forum.empty() || raw.forum == raw.id;
    if (is_paper) {
      if (trim(get_string(raw.content, "title")).empty()) {
        result.rejects.push_back({line_no, line_offset, raw.id, "missing_title"});
        continue;
      }
      papers_raw.push_back(std::move(raw));
    } else {
      replies.push_back(std::move(raw));
    }
  }

  // First pass: materialize papers. Second pass: attach replies, so reply
  // order in the dump never depends on where the paper line appeared.
  std::unordered_map<std::string, std::size_t> index;
  for (auto& raw : papers_raw) {
    if (index.count(raw.id)) {
      result.rejects.push_back({raw.line, raw.byte_offset, raw.id, "duplicate_id"});
      continue;
    }
    PaperRecord paper;
    paper.id = raw.id;
    paper.venue = get_string(raw.content, "venue");
    if (auto year = parse_leading_int(get_string(raw.content, "year"))) {
      paper.year = *year;
    }
    paper.title = trim(get_string(raw.content, "title"));
    paper.abstract_text = trim(get_string(raw.content, "abstract"));
    auto decision = normalize_decision(get_string(raw.content, "decision"));
    if (decision) paper.decision = decision;
    index[paper.id] = result.papers.size();
    result.papers.push_back(std::move(paper));
  }

  for (const auto& raw : replies) {
    const std::string& target =
        raw.replyto.empty() ? raw.forum : raw.replyto;
    auto it = index.find(target);
    if (it == index.end()) {
      // Also try the forum when replyto pointed at another reply.
      it = index.find(raw.forum);
    }
    if (it == index.end()) {
      result.rejects.push_back({raw.line, raw.byte_offset, raw.id, "unlinked_reply"});
      continue;
    }
    PaperRecord& paper = result.papers[it->second];

    std::string review_text = trim(get_string(raw.content, "review"));
    if (!review_text.empty()) {
      ReviewRecord review;
      review.text = review_text;
      review.recommendation =
          parse_leading_int(get_string(raw.content, "rating"));
      review.confidence =
          parse_leading_int(get_string(raw.content, "confidence"));
      paper.reviews.push_back(std::move(review));
    }
    std::string meta = trim(get_string(raw.content, "metareview"));
    if (!meta.empty() && !paper.meta_review) {
      paper.meta_review = meta;
    }
    if (!paper.decision) {
      auto decision = normalize_decision(get_string(raw.content, "decision"));
      if (decision) paper.decision = decision;
    }
  }

  return result;
}

std::string merge_reviews(const PaperRecord& paper) {
  return merge_reviews(paper, paper.reviews.size());
}

std::string merge_reviews(const PaperRecord& paper, std::size_t max_reviews) {
  if (paper.reviews.empty()) {
    throw EmptyInputError("merge_reviews: paper " + paper.id +
                          " has no reviews");
  }
  std::vector<std::string> texts;
  std::size_t n = std::min(max_reviews, paper.reviews.size());
  texts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) texts.push_back(trim(paper.reviews[i].text));
  return join(texts, " ");
}

SplitResult split_dataset(const Corpus& corpus, double train_fraction,
                          double validation_fraction_of_train,
                          std::uint64_t seed) {
  if (corpus.papers.empty()) {
    throw EmptyInputError("split_dataset: empty corpus");
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ArgumentError("split_dataset: train_fraction must be in (0,1)");
  }
  if (!(validation_fraction_of_train >= 0.0 &&
        validation_fraction_of_train < 1.0)) {
    throw ArgumentError(
        "split_dataset: validation_fraction_of_train must be in [0,1)");
  }

  std::vector<std::size_t> order(corpus.papers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Sort by id first so the permutation depends only on corpus content and
  // seed, never on input order.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return corpus.papers[a].id < corpus.papers[b].id;
  });
  SplitMix64 rng(seed);
  seeded_shuffle(order, rng);

  std::size_t n = order.size();
  auto test_size = static_cast<std::size_t>(
      (1.0 - train_fraction) * static_cast<double>(n));
  std::size_t pool = n - test_size;
  auto validation_size = static_cast<std::size_t>(
      validation_fraction_of_train * static_cast<double>(pool));
  std::size_t train_size = pool - validation_size;

  SplitResult split;
  auto take = [&](Corpus& dst, const char* name, std::size_t begin,
                  std::size_t count) {
    dst.papers.reserve(count);
    for (std::size_t i = begin; i < begin + count; ++i) {
      dst.papers.push_back(corpus.papers[order[i]]);
    }
    dst.provenance = {{name, count}};
  };
  take(split.train, "train", 0, train_size);
  take(split.validation, "validation", train_size, validation_size);
  take(split.test, "test", train_size + validation_size, test_size);
  return split;
}

namespace {

// "p1#2" -> "p1"; ids without a  "#<digits>" tail are their own base.
std::string base_id(const std::string& id) {
  std::size_t hash = id.rfind('#');
  if (hash == std::string::npos || hash + 1 >= id.size()) return id;
  for (std::size_t i = hash + 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') return id;
  }
  return id.substr(0, hash);
}

}  // namespace

Corpus merge_corpora(const std::vector<Corpus>& corpora) {
  Corpus merged;
  std::unordered_set<std::string> used;
  std::vector<std::pair<std::string, std::size_t>> renames;

  for (const auto& corpus : corpora) {
    for (const auto& paper : corpus.papers) {
      PaperRecord copy = paper;
      if (used.count(copy.id)) {
        std::string base = base_id(copy.id);
        std::size_t k = 2;
        std::string candidate = base + "#" + std::to_string(k);
        while (used.count(candidate)) {
          ++k;
          candidate = base + "#" + std::to_string(k);
        }
        renames.emplace_back("renamed:" + copy.id + "->" + candidate, 0);
        copy.id = candidate;
      }
      used.insert(copy.id);
      merged.papers.push_back(std::move(copy));
    }
    for (const auto& entry : corpus.provenance) {
      merged.provenance.push_back(entry);
    }
  }
  for (auto& rename : renames) merged.provenance.push_back(std::move(rename));
  return merged;
}

Corpus filter_labeled(const Corpus& corpus) {
  Corpus out;
  for (const auto& paper : corpus.papers) {
    if (paper.decision) out.papers.push_back(paper);
  }
  out.provenance = {{"labeled", out.papers.size()}};
  return out;
}

// ---- JSONL -----------------------------------------------------------------

std::string paper_to_json_line(const PaperRecord& paper) {
  json j;
  j["id"] = paper.id;
  j["venue"] = paper.venue;
  j["year"] = paper.year;
  j["title"] = paper.title;
  j["abstract"] = paper.abstract_text;
  json reviews = json::array();
  for (const auto& review : paper.reviews) {
    json r;
    r["text"] = review.text;
    if (review.recommendation) r["recommendation"] = *review.recommendation;
    if (review.confidence) r["confidence"] = *review.confidence;
    reviews.push_back(std::move(r));
  }
  j["reviews"] = std::move(reviews);
  if (paper.meta_review) j["meta_review"] = *paper.meta_review;
  if (paper.decision) j["decision"] = to_string(*paper.decision);
  return j.dump();
}

PaperRecord paper_from_json_line(std::string_view line) {
  json j = json::parse(line);
  PaperRecord paper;
  paper.id = j.at("id").get<std::string>();
  paper.venue = j.value("venue", std::string());
  paper.year = j.value("year", 0);
  paper.title = j.value("title", std::string());
  paper.abstract_text = j.value("abstract", std::string());
  if (j.contains("reviews")) {
    for (const auto& r : j["reviews"]) {
      ReviewRecord review;
      review.text = r.at("text").get<std::string>();
      if (r.contains("recommendation")) {
        review.recommendation = r["recommendation"].get<int>();
      }
      if (r.contains("confidence")) {
        review.confidence = r["confidence"].get<int>();
      }
      paper.reviews.push_back(std::move(review));
    }
  }
  if (j.contains("meta_review")) {
    paper.meta_review = j["meta_review"].get<std::string>();
  }
  if (j.contains("decision")) {
    paper.decision = normalize_decision(j["decision"].get<std::string>());
  }
  return paper;
}

void write_corpus_jsonl(const Corpus& corpus, std::ostream& out) {
  json header;
  header["provenance"] = json::array();
  for (const auto& [name, count] : corpus.provenance) {
    header["provenance"].push_back(json::array({name, count}));
  }
  out << header.dump() << "\n";
  for (const auto& paper : corpus.papers) {
    out << paper_to_json_line(paper) << "\n";
  }
}

void write_corpus_file(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open for writing: " + path);
  write_corpus_jsonl(corpus, out);
}

Corpus read_corpus_jsonl(std::istream& in, const std::string& source_name) {
  Corpus corpus;
  std::string line;
  bool first = true;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (first) {
      first = false;
      json j = json::parse(line);
      if (j.is_object() && j.contains("provenance") && !j.contains("id")) {
        for (const auto& entry : j["provenance"]) {
          corpus.provenance.emplace_back(entry.at(0).get<std::string>(),
                                         entry.at(1).get<std::size_t>());
        }
        have_header = true;
        continue;
      }
    }
    corpus.papers.push_back(paper_from_json_line(line));
  }
  if (!have_header) {
    corpus.provenance = {{source_name, corpus.papers.size()}};
  }
  return corpus;
}

Corpus read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open corpus file: " + path);
  return read_corpus_jsonl(in, path);
}

std::string corpus_checksum(const Corpus& corpus) {
  std::string blob;
  for (const auto& paper : corpus.papers) {
    blob += paper_to_json_line(paper);
    blob += '\n';
  }
  return sha256_hex(blob);
}

void write_rejects_jsonl(const std::vector<RejectEntry>& rejects,
                         std::ostream& out) {
  for (const auto& reject : rejects) {
    json j;
    j["line"] = reject.line;
    j["byte_offset"] = reject.byte_offset;
    if (!reject.id.empty()) j["id"] = reject.id;
    j["reason"] = reject.reason;
    out << j.dump() << "\n";
  }
}

}  // namespace revagg
