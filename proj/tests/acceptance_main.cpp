// Acceptance gate: runs every headline requirement end to end and prints one
// PASS/FAIL line per criterion.  Exits 0 only if all of them pass.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "hito/classify.hpp"
#include "hito/isometry.hpp"
#include "hito/pattern.hpp"
#include "hito/render.hpp"
#include "hito/theorems.hpp"
#include "hito/word.hpp"

using namespace hito;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  int passed = 0, total = 0;

  void report(int idx, const std::string& name, bool ok, double secs,
              const std::string& detail) {
    ++total;
    passed += ok;
    std::string dots(name.size() < 44 ? 44 - name.size() : 1, '.');
    std::printf("[%d] %s %s %s   (%.3f s)%s%s\n", idx, name.c_str(),
                dots.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : " -- ", detail.c_str());
  }
};

const std::pair<const char*, const char*> kWitnesses[] = {
    {"10001100", "01010"}, {"011001", "000"},   {"1000110", "100110"},
    {"001101", "0011"},    {"0101100", "0110110"}, {"01", "0100"},
    {"10", "1010"},        {"1110", "0110"},    {"0011", "0111"},
    {"011", "010"},        {"01", "1001"},      {"1001", "1001"},
    {"001", "1010"},
};
const char* kWitnessLabels[] = {
    "p111", "p112", "p1a1",     "p11~2", "p2'11", "p11a", "p11[2a]",
    "p1m1", "pm11", "p[2'm]11", "p2'ma", "pmm2",  "pma2",
};

const std::set<std::string> kStitchable = {
    "p111", "p112", "p1a1",     "p11~2", "p2'11", "p11a", "p11[2a]",
    "p1m1", "pm11", "p[2'm]11", "p2'ma", "pmm2",  "pma2"};

}  // namespace

int main() {
  Gate gate;
  std::printf("acceptance gate: two-sided hitomezashi friezes\n");

  // [1] the thirteen published witness patterns classify correctly, < 1 s
  {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    for (int k = 0; k < 13; ++k) {
      Pattern p{Word(kWitnesses[k].first), Word(kWitnesses[k].second)};
      std::string got = classify(p).label;
      if (got != kWitnessLabels[k]) {
        ok = false;
        detail = p.to_line() + " got " + got + " want " + kWitnessLabels[k];
        break;
      }
    }
    double secs = seconds_since(t0);
    if (secs >= 1.0) {
      ok = false;
      detail = "too slow";
    }
    gate.report(1, "13 witness patterns classified", ok, secs, detail);
  }

  // [2]..[5] share one full census pass over |x| <= 8, |y| <= 7
  long count = 0;
  std::set<std::string> observed;
  bool lemmas_ok = true, oracle_ok = true;
  std::string lemma_detail, oracle_detail;
  auto census_t0 = Clock::now();
  for_each_pattern(8, 7, [&](const Pattern& p) {
    ++count;
    ClassificationReport r = classify(p);
    observed.insert(r.label);

    // criterion 4: the mirror condition in both readings
    bool anchored = mirror_condition_II(p.x(), true);
    Isometry anchored_mirror{-1, +1, +1, p.x().size() - 1};
    if (anchored != is_symmetry(p, anchored_mirror) && lemmas_ok) {
      lemmas_ok = false;
      lemma_detail = "anchored mirror disagrees at " + p.to_line();
    }
    bool general = mirror_condition_II(p.x(), false);
    if (general != r.signature.content_a.has(Symbol::Mirror) && lemmas_ok) {
      lemmas_ok = false;
      lemma_detail = "generalized mirror disagrees at " + p.to_line();
    }

    // criterion 5: the detected symmetries behave like a group
    if (oracle_ok) {
      std::vector<Isometry> gens;
      gens.push_back(Isometry::translation(p.translation_period()));
      for (const auto& [key, iso] : r.signature.anchors) gens.push_back(iso);
      for (const Isometry& g : gens)
        if (!is_symmetry(p, inverse(g))) {
          oracle_ok = false;
          oracle_detail = "inverse fails at " + p.to_line();
        }
      for (const Isometry& g1 : gens)
        for (const Isometry& g2 : gens)
          if (!is_symmetry(p, compose(g1, g2))) {
            oracle_ok = false;
            oracle_detail = "closure fails at " + p.to_line();
          }
      for (int t = 1; t < 2 * p.translation_period(); t += 2)
        if (is_symmetry(p, Isometry::translation(t))) {
          oracle_ok = false;
          oracle_detail = "odd translation accepted at " + p.to_line();
        }
      if (classify(p.dual()).label != r.label) {
        oracle_ok = false;
        oracle_detail = "dual label differs at " + p.to_line();
      }
    }
  });
  double census_secs = seconds_since(census_t0);

  {
    bool ok = count == 128520 && observed == kStitchable &&
              census_secs < 300.0;
    std::string detail;
    if (count != 128520) detail = "count " + std::to_string(count);
    else if (observed != kStitchable)
      detail = "observed " + std::to_string(observed.size()) + " labels";
    else if (census_secs >= 300.0) detail = "too slow";
    gate.report(2, "census of 128520 patterns, 13 labels", ok, census_secs,
                detail);
  }

  // [3] the impossibility theorems hold exhaustively
  {
    auto t0 = Clock::now();
    TheoremReport rep = verify_theorems(8, 7);
    bool ok = rep.violations.empty() && rep.all_observed_realizable &&
              rep.patterns_checked == 128520;
    gate.report(3, "impossibility theorems verified", ok, seconds_since(t0),
                ok ? "" : std::to_string(rep.violations.size()) +
                             " violations");
  }

  // [4] word-level results: lemma I and both mirror readings
  {
    auto t0 = Clock::now();
    long words = 0;
    for (int len = 1; len <= 12 && lemmas_ok; ++len)
      for (std::uint64_t i = 0; i < (1ull << len); ++i) {
        ++words;
        if (!lemma_I_holds(Word::from_index(len, i))) {
          lemmas_ok = false;
          lemma_detail = "lemma I fails";
          break;
        }
      }
    if (words != 8190 && lemmas_ok) {
      lemmas_ok = false;
      lemma_detail = "enumerated " + std::to_string(words) + " words";
    }
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 10000 && lemmas_ok; ++trial)
      if (!lemma_I_holds(testutil::random_word(
              rng, 13 + static_cast<int>(rng() % 52)))) {
        lemmas_ok = false;
        lemma_detail = "lemma I fails on random word";
      }
    gate.report(4, "word lemma and mirror conditions", lemmas_ok,
                seconds_since(t0), lemma_detail);
  }

  // [5] oracle self-consistency, accumulated during the census pass
  gate.report(5, "oracle group consistency", oracle_ok, census_secs,
              oracle_detail);

  // [6] catalogue exactness
  {
    auto t0 = Clock::now();
    const auto& entries = catalogue();
    std::set<std::string> labels;
    int both = 0, hito_only = 0, celtic_only = 0, neither = 0, stitch = 0;
    for (const auto& e : entries) {
      labels.insert(e.label);
      both += e.realization == RealizationClass::Both;
      hito_only += e.realization == RealizationClass::HitomezashiOnly;
      celtic_only += e.realization == RealizationClass::CelticOnly;
      neither += e.realization == RealizationClass::Neither;
      stitch += e.hitomezashi_realizable;
    }
    bool ok = entries.size() == 31 && labels.size() == 31 && both == 5 &&
              hito_only == 8 && celtic_only == 5 && neither == 13 &&
              stitch == 13;
    for (const auto& e : entries)
      ok = ok && (kStitchable.count(e.label) == 1) == e.hitomezashi_realizable;
    gate.report(6, "catalogue of 31 groups exact", ok, seconds_since(t0),
                ok ? "" : "catalogue drifted");
  }

  // [7] ascii rendering round-trips for |x| <= 4, |y| <= 5, < 10 s
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int nx = 1; nx <= 4 && ok; ++nx)
      for (std::uint64_t xi = 0; xi < (1ull << nx) && ok; ++xi)
        for (int ny = 2; ny <= 5 && ok; ++ny)
          for (std::uint64_t yi = 0; yi < (1ull << ny) && ok; ++yi) {
            Pattern p(Word::from_index(nx, xi), Word::from_index(ny, yi));
            const int h = p.height();
            const long w = 2L * p.translation_period();
            auto blocks = testutil::split_ascii(render_ascii(p), h);
            if (blocks.front.empty()) {
              ok = false;
              detail = "bad block shape at " + p.to_line();
              break;
            }
            for (auto [grid, side] :
                 {std::pair{&blocks.front, Side::Front},
                  std::pair{&blocks.back, Side::Back}}) {
              for (int j = 0; j + 1 < h && ok; ++j)
                for (long i = 0; i <= w; ++i)
                  if ((testutil::vert_glyph(*grid, h, i, j) == '|') !=
                      p.present({Orientation::Vertical, i, j}, side)) {
                    ok = false;
                    detail = "vertical glyph wrong at " + p.to_line();
                    break;
                  }
              for (int j = 0; j < h && ok; ++j)
                for (long i = 0; i < w; ++i)
                  if ((testutil::horiz_glyph(*grid, h, i, j) == '-') !=
                      p.present({Orientation::Horizontal, i, j}, side)) {
                    ok = false;
                    detail = "horizontal glyph wrong at " + p.to_line();
                    break;
                  }
            }
            if (!ok) break;
            std::vector<std::uint8_t> xs, ys;
            for (long i = 0; i < w; ++i)
              xs.push_back(testutil::vert_glyph(blocks.front, h, i, 0) ==
                           '|');
            for (int j = 0; j < h; ++j)
              ys.push_back(testutil::horiz_glyph(blocks.front, h, 0, j) ==
                           '-');
            Pattern q(Word::from_bits(xs), Word::from_bits(ys));
            for (long i = -4; i < w + 4 && ok; ++i)
              for (int j = 0; j < h; ++j) {
                if (j + 1 < h &&
                    q.front_present({Orientation::Vertical, i, j}) !=
                        p.front_present({Orientation::Vertical, i, j}))
                  ok = false;
                if (q.front_present({Orientation::Horizontal, i, j}) !=
                    p.front_present({Orientation::Horizontal, i, j}))
                  ok = false;
                if (!ok) {
                  detail = "round-trip mismatch at " + p.to_line();
                  break;
                }
              }
          }
    double secs = seconds_since(t0);
    if (secs >= 10.0) {
      ok = false;
      detail = "too slow";
    }
    gate.report(7, "ascii rendering round-trips", ok, secs, detail);
  }

  std::printf("acceptance: %d/%d criteria passed\n", gate.passed, gate.total);
  return gate.passed == gate.total ? 0 : 1;
}
