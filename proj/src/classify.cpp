#include "hito/classify.hpp"

#include <array>
#include <cassert>

#include "hito/errors.hpp"

namespace hito {

const char* symbol_text(Symbol s) {
  switch (s) {
    case Symbol::Mirror: return "m";
    case Symbol::Glide: return "a";
    case Symbol::Rot2: return "2";
    case Symbol::Screw: return "2'";
    case Symbol::RotoRefl: return "~2";
  }
  return "?";
}

const char* realization_class_text(RealizationClass c) {
  switch (c) {
    case RealizationClass::HitomezashiOnly: return "HitomezashiOnly";
    case RealizationClass::CelticOnly: return "CelticOnly";
    case RealizationClass::Both: return "Both";
    case RealizationClass::Neither: return "Neither";
  }
  return "?";
}

namespace {

constexpr Symbol M = Symbol::Mirror;
constexpr Symbol A = Symbol::Glide;
constexpr Symbol R2 = Symbol::Rot2;
constexpr Symbol S2 = Symbol::Screw;
constexpr Symbol RR = Symbol::RotoRefl;

constexpr RealizationClass HITO = RealizationClass::HitomezashiOnly;
constexpr RealizationClass CELT = RealizationClass::CelticOnly;
constexpr RealizationClass BOTH = RealizationClass::Both;
constexpr RealizationClass NONE = RealizationClass::Neither;

struct Row {
  const char* label;
  RealizationClass realization;
  AxisSet da, db, dc;  // displayed
  AxisSet ca, cb, cc;  // full content
};

// The 31 two-sided frieze groups.  Labels use one position per axis
// (a, b, c); "1" means no symmetry on that axis and stacked symbols are
// bracketed.  A group's full content can exceed what the label displays:
// products of the displayed generators add rotations and roto-reflections
// that the conventional short symbol leaves out.  The content sets below
// are those closures; no two rows share one, so content identifies the
// group.  Realization classes record which groups occur among hitomezashi
// and which among Celtic friezes.
const std::array<Row, 31> kCatalogue = {{
    // label        realization  displayed a/b/c             content a/b/c
    {"p111",    BOTH, {},       {},       {},       {},       {},       {}},
    {"p112",    BOTH, {},       {},       {R2},     {},       {},       {R2}},
    {"p1a1",    BOTH, {},       {A},      {},       {},       {A},      {}},
    {"p11~2",   BOTH, {},       {},       {RR},     {},       {},       {RR}},
    {"p2'11",   BOTH, {S2},     {},       {},       {S2},     {},       {}},
    {"p11a",    HITO, {},       {},       {A},      {},       {},       {A}},
    {"p11[2a]", HITO, {},       {},       {R2, A},  {},       {},       {R2, A, RR}},
    {"p1m1",    HITO, {},       {M},      {},       {},       {M},      {}},
    {"pm11",    HITO, {M},      {},       {},       {M},      {},       {}},
    {"p[2'm]11", HITO, {S2, M}, {},       {},       {S2, M},  {},       {RR}},
    {"p2'ma",   HITO, {S2},     {M},      {A},      {S2},     {M},      {A}},
    {"pmm2",    HITO, {M},      {M},      {R2},     {M},      {M},      {R2}},
    {"pma2",    HITO, {M},      {A},      {R2},     {M},      {A},      {R2}},
    {"p121",    CELT, {},       {R2},     {},       {},       {R2},     {}},
    {"p1[2a]1", CELT, {},       {R2, A},  {},       {},       {R2, A},  {RR}},
    {"p211",    CELT, {R2},     {},       {},       {R2},     {},       {}},
    {"p222",    CELT, {R2},     {R2},     {R2},     {R2},     {R2},     {R2}},
    {"p2'22",   CELT, {S2},     {R2},     {R2},     {S2},     {R2},     {R2}},
    {"p2aa",    NONE, {R2},     {A},      {A},      {R2},     {A},      {A}},
    {"p[2m]11", NONE, {R2, M},  {},       {},       {R2, M},  {},       {RR}},
    {"p1[2m]1", NONE, {},       {R2, M},  {},       {},       {R2, M},  {RR}},
    {"pm2a",    NONE, {M},      {R2},     {A},      {M},      {R2},     {A}},
    {"pmma",    NONE, {M},      {M},      {A},      {S2, M},  {R2, M},  {R2, A, RR}},
    {"pmaa",    NONE, {M},      {A},      {A},      {R2, M},  {R2, A},  {R2, A, RR}},
    {"p11m",    NONE, {},       {},       {M},      {},       {},       {M}},
    {"p2mm",    NONE, {R2},     {M},      {M},      {R2},     {M},      {M}},
    {"p11[2m]", NONE, {},       {},       {R2, M},  {},       {},       {R2, M, RR}},
    {"p2'am",   NONE, {S2},     {A},      {M},      {S2},     {A},      {M}},
    {"pm2m",    NONE, {M},      {R2},     {M},      {M},      {R2},     {M}},
    {"pmmm",    NONE, {M},      {M},      {M},      {R2, M},  {R2, M},  {R2, M, RR}},
    {"pmam",    NONE, {M},      {A},      {M},      {S2, M},  {R2, A},  {R2, M, RR}},
}};

std::vector<CatalogueEntry> build_catalogue() {
  std::vector<CatalogueEntry> out;
  out.reserve(kCatalogue.size());
  for (const Row& r : kCatalogue) {
    bool hito = r.realization == HITO || r.realization == BOTH;
    bool celt = r.realization == CELT || r.realization == BOTH;
    out.push_back({r.label, r.realization, hito, celt, r.da, r.db, r.dc,
                   r.ca, r.cb, r.cc});
  }
  return out;
}

using SetKey = std::array<AxisSet, 3>;

std::map<SetKey, std::string> build_label_index() {
  std::map<SetKey, std::string> index;
  for (const Row& r : kCatalogue) {
    for (SetKey key : {SetKey{r.da, r.db, r.dc}, SetKey{r.ca, r.cb, r.cc}}) {
      auto [it, inserted] = index.emplace(key, r.label);
      // Displayed and content keys never point at different groups.
      assert(inserted || it->second == r.label);
      (void)it;
      (void)inserted;
    }
  }
  return index;
}

std::string render_position(const AxisSet& s) {
  if (s.empty()) return "1";
  std::string rot;
  if (s.has(R2)) rot = "2";
  if (s.has(S2)) rot += "2'";
  if (s.has(RR)) rot += "~2";
  std::string refl;
  if (s.has(M)) refl = "m";
  if (s.has(A)) refl += "a";
  if (!rot.empty() && !refl.empty()) return "[" + rot + refl + "]";
  return rot + refl;
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = build_catalogue();
  return entries;
}

const CatalogueEntry& catalogue_entry(std::string_view label) {
  std::string canon = normalize_label(label);
  for (const CatalogueEntry& e : catalogue())
    if (e.label == canon) return e;
  throw UnknownLabel("label \"" + std::string(label) + "\" not in catalogue");
}

std::string signature_to_label(const AxisSet& a, const AxisSet& b,
                               const AxisSet& c) {
  static const std::map<SetKey, std::string> index = build_label_index();
  auto it = index.find(SetKey{a, b, c});
  if (it == index.end())
    throw SignatureNotInCatalogue("symbol combination p" +
                                  render_position(a) + render_position(b) +
                                  render_position(c) +
                                  " is not a two-sided frieze group");
  return it->second;
}

namespace {

// One position token of a label: "1", "m", "a", "2", "2'", "~2", or a
// stacked pair.  Stacks may be written bracketed ("[2a]") or flat ("2a").
bool parse_position(std::string_view text, std::size_t& pos, AxisSet& out,
                    bool bracketed) {
  AxisSet set;
  auto take_symbol = [&]() -> bool {
    if (pos >= text.size()) return false;
    char ch = text[pos];
    if (ch == '1' && set.empty() && !bracketed) {
      ++pos;
      return true;  // "1" stands alone for an empty position
    }
    if (ch == 'm') {
      set.add(M);
      ++pos;
      return true;
    }
    if (ch == 'a') {
      set.add(A);
      ++pos;
      return true;
    }
    if (ch == '~' && pos + 1 < text.size() && text[pos + 1] == '2') {
      set.add(RR);
      pos += 2;
      return true;
    }
    if (ch == '2') {
      ++pos;
      // ASCII apostrophe or U+2032 PRIME (e2 80 b2)
      if (pos < text.size() && text[pos] == '\'') {
        set.add(S2);
        ++pos;
      } else if (text.substr(pos, 3) == "\xe2\x80\xb2") {
        set.add(S2);
        pos += 3;
      } else if (text.substr(pos, 2) == "\xcc\x83") {
        set.add(RR);  // U+0303 combining tilde after the 2
        pos += 2;
      } else {
        set.add(R2);
      }
      return true;
    }
    return false;
  };

  if (!take_symbol()) return false;
  if (bracketed) {
    while (pos < text.size() && text[pos] != ']')
      if (!take_symbol()) return false;
  }
  out = set;
  return true;
}

// Tries to split `text` into exactly three position tokens starting at
// `pos`, allowing flat stacked pairs.  Backtracking search; label grammar
// is tiny, so this stays cheap.
bool parse_positions(std::string_view text, std::size_t pos,
                     std::array<AxisSet, 3>& out, int depth) {
  if (depth == 3) return pos == text.size();
  if (pos >= text.size()) return false;
  if (text[pos] == '[') {
    std::size_t p = pos + 1;
    AxisSet set;
    if (!parse_position(text, p, set, true)) return false;
    if (p >= text.size() || text[p] != ']') return false;
    ++p;
    out[static_cast<std::size_t>(depth)] = set;
    return parse_positions(text, p, out, depth + 1);
  }
  // Greedy first (longest token), then shorter splits.
  for (bool allow_stack : {true, false}) {
    std::size_t p = pos;
    AxisSet set;
    if (!parse_position(text, p, set, false)) continue;
    if (allow_stack && !set.empty()) {
      std::size_t p2 = p;
      AxisSet second;
      AxisSet more = set;
      if (parse_position(text, p2, second, false)) {
        for (Symbol s : {M, A, R2, S2, RR})
          if (second.has(s)) more.add(s);
      }
      if (more.count() == 2 && p2 > p) {
        std::array<AxisSet, 3> attempt = out;
        attempt[static_cast<std::size_t>(depth)] = more;
        if (parse_positions(text, p2, attempt, depth + 1)) {
          out = attempt;
          return true;
        }
      }
      continue;  // retry without stacking
    }
    std::array<AxisSet, 3> attempt = out;
    attempt[static_cast<std::size_t>(depth)] = set;
    if (parse_positions(text, p, attempt, depth + 1)) {
      out = attempt;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string normalize_label(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    throw UnknownLabel("empty label");
  std::string_view body = text.substr(begin, end - begin + 1);
  if (body.size() < 4 || (body[0] != 'p' && body[0] != 'P'))
    throw UnknownLabel("label \"" + std::string(text) + "\" not in catalogue");

  std::array<AxisSet, 3> sets{};
  if (parse_positions(body, 1, sets, 0)) {
    for (const CatalogueEntry& e : catalogue())
      if (e.disp_a == sets[0] && e.disp_b == sets[1] && e.disp_c == sets[2])
        return e.label;
  }
  throw UnknownLabel("label \"" + std::string(text) + "\" not in catalogue");
}

namespace {

void note(Signature& sig, AxisSet Signature::*axis, const char* key, Symbol s,
          const Isometry& witness) {
  (sig.*axis).add(s);
  sig.anchors.emplace(key, witness);
}

// First anchored symmetry (-1, sv, sz, 2c) with 2c in [0, 2P); anchors a
// half period apart are related by a lattice translation, so one period of
// anchors exhausts all classes.
bool find_anchored(const Pattern& p, int sv, int sz, Isometry& out) {
  for (long two_c = 0; two_c < 2L * p.translation_period(); ++two_c) {
    Isometry g{-1, sv, sz, two_c};
    if (is_symmetry(p, g)) {
      out = g;
      return true;
    }
  }
  return false;
}

}  // namespace

Signature detect_signature(const Pattern& p) {
  const long half = p.translation_period() / 2;
  Signature sig;
  Isometry g;

  // axis a: rotation (+,-,-) with shift 0 (plain) or P/2 (screw);
  // mirror (-,+,+) at some anchor.
  if (is_symmetry(p, {+1, -1, -1, 0}))
    note(sig, &Signature::content_a, "a:2", R2, {+1, -1, -1, 0});
  if (is_symmetry(p, {+1, -1, -1, half}))
    note(sig, &Signature::content_a, "a:2'", S2, {+1, -1, -1, half});
  if (find_anchored(p, +1, +1, g))
    note(sig, &Signature::content_a, "a:m", M, g);

  // axis b: reflection (+,-,+) with shift 0 (mirror) or P/2 (glide);
  // rotation (-,+,-) at some anchor.
  if (is_symmetry(p, {+1, -1, +1, 0}))
    note(sig, &Signature::content_b, "b:m", M, {+1, -1, +1, 0});
  if (is_symmetry(p, {+1, -1, +1, half}))
    note(sig, &Signature::content_b, "b:a", A, {+1, -1, +1, half});
  if (find_anchored(p, +1, -1, g))
    note(sig, &Signature::content_b, "b:2", R2, g);

  // axis c: reflection across the strip plane (+,+,-) with shift 0 or P/2;
  // rotation (-,-,+) and roto-reflection (-,-,-) at some anchor.
  if (is_symmetry(p, {+1, +1, -1, 0}))
    note(sig, &Signature::content_c, "c:m", M, {+1, +1, -1, 0});
  if (is_symmetry(p, {+1, +1, -1, half}))
    note(sig, &Signature::content_c, "c:a", A, {+1, +1, -1, half});
  if (find_anchored(p, -1, +1, g))
    note(sig, &Signature::content_c, "c:2", R2, g);
  if (find_anchored(p, -1, -1, g))
    note(sig, &Signature::content_c, "c:~2", RR, g);

  // A plain and a shifted variant of the same family can never coexist:
  // composing them would yield a translation by half the period.
  if ((sig.content_a.has(R2) && sig.content_a.has(S2)) ||
      (sig.content_b.has(M) && sig.content_b.has(A)) ||
      (sig.content_c.has(M) && sig.content_c.has(A)))
    throw SignatureNotInCatalogue(
        "half-period translation detected; translation_period is wrong");

  std::string label =
      signature_to_label(sig.content_a, sig.content_b, sig.content_c);
  const CatalogueEntry& e = catalogue_entry(label);
  sig.axis_a = e.disp_a;
  sig.axis_b = e.disp_b;
  sig.axis_c = e.disp_c;
  return sig;
}

ClassificationReport classify(const Pattern& p) {
  Signature sig = detect_signature(p);
  return {signature_to_label(sig.content_a, sig.content_b, sig.content_c),
          std::move(sig), p.translation_period()};
}

}  // namespace hito
