#include "hito/theorems.hpp"

#include <set>
#include <sstream>

#include "hito/errors.hpp"
#include "hito/isometry.hpp"

namespace hito {

bool lemma_I_holds(const Word& z) {
  if (z == z.complement()) return false;
  if (z.size() % 2 == 1 && z == z.reversed().complement()) return false;
  return true;
}

bool mirror_condition_II(const Word& x, bool anchored) {
  if (anchored) return x.size() % 2 == 0 && x.palindrome();
  // Double an odd-length word so every candidate mirror centre lands on a
  // rotation boundary, then look for a palindromic rotation.
  Word expanded = x;
  if (x.size() % 2 == 1) {
    std::string twice = x.str() + x.str();
    expanded = Word(twice);
  }
  for (int k = 0; k < expanded.size(); ++k)
    if (expanded.rotated(k).palindrome()) return true;
  return false;
}

std::pair<Word, Word> rotation_about_a_words(const Word& x, const Word& y) {
  Word new_x = y.size() % 2 == 0 ? x : x.complement();
  return {new_x, y.reversed()};
}

void for_each_pattern(int max_x, int max_y,
                      const std::function<void(const Pattern&)>& fn) {
  for (int nx = 1; nx <= max_x; ++nx)
    for (int ny = 2; ny <= max_y; ++ny)
      for (std::uint64_t xi = 0; xi < (1ull << nx); ++xi)
        for (std::uint64_t yi = 0; yi < (1ull << ny); ++yi)
          fn(Pattern(Word::from_index(nx, xi), Word::from_index(ny, yi)));
}

void enumerate_patterns(int max_x, int max_y,
                        const std::function<void(const CensusRow&)>& fn) {
  for_each_pattern(max_x, max_y, [&](const Pattern& p) {
    ClassificationReport r = classify(p);
    fn(CensusRow{p.x(), p.y(), r.label, r.period});
  });
}

std::string census_csv(int max_x, int max_y) {
  std::ostringstream os;
  os << "x,y,label,period\n";
  enumerate_patterns(max_x, max_y, [&](const CensusRow& row) {
    os << row.x.str() << ',' << row.y.str() << ',' << row.label << ','
       << row.period << '\n';
  });
  return os.str();
}

TheoremReport verify_theorems(int max_x, int max_y) {
  TheoremReport report;
  report.max_x = max_x;
  report.max_y = max_y;
  std::set<std::string> observed;

  for_each_pattern(max_x, max_y, [&](const Pattern& p) {
    ClassificationReport r = classify(p);
    ++report.patterns_checked;
    observed.insert(r.label);
    CensusRow row{p.x(), p.y(), r.label, r.period};
    const Signature& sig = r.signature;
    if (sig.content_c.has(Symbol::Mirror))
      report.violations.push_back({row, "theorem-1"});
    if (sig.content_a.has(Symbol::Rot2) || sig.content_b.has(Symbol::Rot2))
      report.violations.push_back({row, "theorem-2"});
    if (sig.content_a.has(Symbol::Mirror) && sig.content_c.has(Symbol::Glide))
      report.violations.push_back({row, "theorem-3"});
    if (!catalogue_entry(r.label).hitomezashi_realizable)
      report.violations.push_back({row, "label-not-realizable"});
  });

  report.all_observed_realizable = true;
  for (const CatalogueEntry& e : catalogue()) {
    if (!observed.count(e.label)) continue;
    report.observed_labels.push_back(e.label);
    if (!e.hitomezashi_realizable) report.all_observed_realizable = false;
  }
  return report;
}

std::optional<Pattern> find_witness(std::string_view label, int max_x,
                                    int max_y) {
  std::string canon = normalize_label(label);
  std::optional<Pattern> found;
  // for_each_pattern has no early stop; witnesses are cheap enough that a
  // full scan stays well inside the CLI's latency budget.
  for_each_pattern(max_x, max_y, [&](const Pattern& p) {
    if (!found && classify(p).label == canon) found = p;
  });
  return found;
}

}  // namespace hito
