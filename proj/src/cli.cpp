#include "hito/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hito/classify.hpp"
#include "hito/errors.hpp"
#include "hito/isometry.hpp"
#include "hito/pattern.hpp"
#include "hito/render.hpp"
#include "hito/theorems.hpp"
#include "json.hpp"

namespace hito::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr Symbol kSymbolOrder[] = {Symbol::Rot2, Symbol::Screw,
                                   Symbol::RotoRefl, Symbol::Mirror,
                                   Symbol::Glide};

std::string axis_text(const AxisSet& s) {
  if (s.empty()) return "1";
  std::string t;
  for (Symbol sym : kSymbolOrder)
    if (s.has(sym)) t += symbol_text(sym);
  return t;
}

json axis_json(const AxisSet& s) {
  json a = json::array();
  for (Symbol sym : kSymbolOrder)
    if (s.has(sym)) a.push_back(symbol_text(sym));
  return a;
}

json axes_json(const AxisSet& a, const AxisSet& b, const AxisSet& c) {
  json j;
  j["a"] = axis_json(a);
  j["b"] = axis_json(b);
  j["c"] = axis_json(c);
  return j;
}

json classification_json(const Pattern& p, const ClassificationReport& r) {
  const Signature& sig = r.signature;
  json j;
  j["x"] = p.x().str();
  j["y"] = p.y().str();
  j["label"] = r.label;
  j["period"] = r.period;
  j["realization"] =
      realization_class_text(catalogue_entry(r.label).realization);
  j["axes"] = axes_json(sig.axis_a, sig.axis_b, sig.axis_c);
  j["content"] = axes_json(sig.content_a, sig.content_b, sig.content_c);
  json syms = json::array();
  for (const auto& [key, iso] : sig.anchors) {
    auto colon = key.find(':');
    json s;
    s["axis"] = key.substr(0, colon);
    s["symbol"] = key.substr(colon + 1);
    s["description"] = describe(iso);
    syms.push_back(s);
  }
  j["symmetries"] = syms;
  return j;
}

void print_classification(std::ostream& out, const Pattern& p,
                          const ClassificationReport& r) {
  const Signature& sig = r.signature;
  out << p.to_line() << "\n";
  out << "label: " << r.label << "\n";
  out << "period: " << r.period << "\n";
  out << "realization: "
      << realization_class_text(catalogue_entry(r.label).realization) << "\n";
  out << "axes: a=" << axis_text(sig.axis_a) << " b=" << axis_text(sig.axis_b)
      << " c=" << axis_text(sig.axis_c) << "\n";
  out << "content: a=" << axis_text(sig.content_a)
      << " b=" << axis_text(sig.content_b)
      << " c=" << axis_text(sig.content_c) << "\n";
  if (sig.anchors.empty()) {
    out << "symmetries: translations only\n";
  } else {
    out << "symmetries:\n";
    for (const auto& [key, iso] : sig.anchors)
      out << "  " << describe(iso) << "\n";
  }
}

// Streams to `out` when path is empty, else writes the file.
bool write_text(const std::string& text, const std::string& path,
                std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  f << text;
  return true;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-sided hitomezashi friezes: classification, census and "
               "rendering of stitch patterns",
               "hitofrieze"};
  app.require_subcommand(1);
  int rc = 0;

  // classify
  std::string cx, cy, cfile;
  bool cjson = false;
  auto* cls = app.add_subcommand(
      "classify", "Name the two-sided frieze group of a pattern");
  cls->add_option("--x", cx, "vertical first-stitch word (bits)");
  cls->add_option("--y", cy, "horizontal first-stitch word (bits)");
  cls->add_option("--file", cfile, "file of x=<bits> y=<bits> lines");
  cls->add_flag("--json", cjson, "emit JSON");
  cls->callback([&] {
    std::vector<Pattern> pats;
    if (!cfile.empty()) {
      if (!cx.empty() || !cy.empty())
        throw CLI::ValidationError("give --x/--y or --file, not both");
      std::ifstream f(cfile);
      if (!f) throw hito::ParseError("cannot open " + cfile);
      std::string line;
      while (std::getline(f, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        pats.push_back(Pattern::parse_line(line));
      }
      if (pats.empty()) throw hito::ParseError(cfile + ": no patterns");
    } else {
      if (cx.empty() || cy.empty())
        throw CLI::ValidationError("need --x and --y (or --file)");
      pats.emplace_back(Word(cx), Word(cy));
    }
    if (cjson) {
      if (cfile.empty()) {
        out << classification_json(pats.front(), classify(pats.front()))
                   .dump(2)
            << "\n";
      } else {
        json arr = json::array();
        for (const Pattern& p : pats)
          arr.push_back(classification_json(p, classify(p)));
        out << arr.dump(2) << "\n";
      }
    } else {
      bool first = true;
      for (const Pattern& p : pats) {
        if (!first) out << "\n";
        first = false;
        print_classification(out, p, classify(p));
      }
    }
  });

  // render
  std::string rx, ry, rfmt = "ascii", rpath;
  int rper = 2;
  auto* ren = app.add_subcommand(
      "render", "Draw both sides of a pattern as ASCII art or SVG");
  ren->add_option("--x", rx, "vertical first-stitch word (bits)")->required();
  ren->add_option("--y", ry, "horizontal first-stitch word (bits)")
      ->required();
  ren->add_option("--periods", rper, "window width in translation periods")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  ren->add_option("--format", rfmt, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  ren->add_option("--out", rpath, "output file (default: stdout)");
  ren->callback([&] {
    Pattern p{Word(rx), Word(ry)};
    RenderOptions o;
    o.periods = rper;
    std::string text = rfmt == "svg" ? render_svg(p, o) : render_ascii(p, o);
    if (!write_text(text, rpath, out, err)) rc = 64;
  });

  // dual
  std::string dx, dy;
  auto* du = app.add_subcommand(
      "dual", "Print the pattern whose front is this pattern's back");
  du->add_option("--x", dx, "vertical first-stitch word (bits)")->required();
  du->add_option("--y", dy, "horizontal first-stitch word (bits)")
      ->required();
  du->callback(
      [&] { out << Pattern(Word(dx), Word(dy)).dual().to_line() << "\n"; });

  // enumerate
  int emx = 8, emy = 7;
  std::string epath;
  auto* en = app.add_subcommand(
      "enumerate", "Classify every pattern up to the given word lengths");
  en->add_option("--max-x", emx, "largest |x|")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  en->add_option("--max-y", emy, "largest |y|")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  en->add_option("--out", epath, "CSV output file (default: stdout)");
  en->callback([&] {
    if (!write_text(census_csv(emx, emy), epath, out, err)) rc = 64;
  });

  // verify-theorems
  int vmx = 8, vmy = 7;
  bool vjson = false;
  auto* ver = app.add_subcommand(
      "verify-theorems",
      "Check the impossibility results over an exhaustive census");
  ver->add_option("--max-x", vmx, "largest |x|")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  ver->add_option("--max-y", vmy, "largest |y|")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  ver->add_flag("--json", vjson, "emit JSON");
  ver->callback([&] {
    TheoremReport rep = verify_theorems(vmx, vmy);
    bool ok = rep.violations.empty() && rep.all_observed_realizable;
    if (vjson) {
      json j;
      j["max_x"] = rep.max_x;
      j["max_y"] = rep.max_y;
      j["patterns_checked"] = rep.patterns_checked;
      json viols = json::array();
      for (const Violation& v : rep.violations) {
        json jv;
        jv["x"] = v.row.x.str();
        jv["y"] = v.row.y.str();
        jv["label"] = v.row.label;
        jv["period"] = v.row.period;
        jv["reason"] = v.reason;
        viols.push_back(jv);
      }
      j["violations"] = viols;
      j["observed_labels"] = rep.observed_labels;
      j["all_observed_realizable"] = rep.all_observed_realizable;
      out << j.dump(2) << "\n";
    } else {
      out << "bounds: |x| <= " << rep.max_x << ", |y| <= " << rep.max_y
          << "\n";
      out << "patterns checked: " << rep.patterns_checked << "\n";
      out << "violations: " << rep.violations.size() << "\n";
      std::size_t shown = std::min<std::size_t>(rep.violations.size(), 20);
      for (std::size_t k = 0; k < shown; ++k) {
        const Violation& v = rep.violations[k];
        out << "  x=" << v.row.x.str() << " y=" << v.row.y.str() << " "
            << v.row.label << " (" << v.reason << ")\n";
      }
      if (rep.violations.size() > shown)
        out << "  ... and " << rep.violations.size() - shown << " more\n";
      out << "observed labels (" << rep.observed_labels.size() << "):";
      for (const std::string& l : rep.observed_labels) out << " " << l;
      out << "\n";
      out << "all observed labels hitomezashi-realizable: "
          << (rep.all_observed_realizable ? "yes" : "no") << "\n";
    }
    if (!ok) rc = 2;
  });

  // witness
  std::string wgroup;
  int wmx = 8, wmy = 7;
  auto* wit = app.add_subcommand(
      "witness", "Find the first pattern with the given group label");
  wit->add_option("--group", wgroup, "group label, e.g. p1a1 or p11[2a]")
      ->required();
  wit->add_option("--max-x", wmx, "largest |x|")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  wit->add_option("--max-y", wmy, "largest |y|")
      ->check(CLI::Range(2, 10))
      ->capture_default_str();
  wit->callback([&] {
    std::optional<Pattern> w = find_witness(wgroup, wmx, wmy);
    if (w) {
      out << w->to_line() << "\n";
    } else {
      out << "none\n";
      rc = 1;
    }
  });

  // catalogue
  bool gjson = false;
  auto* cat =
      app.add_subcommand("catalogue", "List the 31 two-sided frieze groups");
  cat->add_flag("--json", gjson, "emit JSON");
  cat->callback([&] {
    const std::vector<CatalogueEntry>& entries = catalogue();
    if (gjson) {
      json arr = json::array();
      for (const CatalogueEntry& e : entries) {
        json j;
        j["label"] = e.label;
        j["realization"] = realization_class_text(e.realization);
        j["hitomezashi"] = e.hitomezashi_realizable;
        j["celtic"] = e.celtic_realizable;
        j["axes"] = axes_json(e.disp_a, e.disp_b, e.disp_c);
        j["content"] = axes_json(e.cont_a, e.cont_b, e.cont_c);
        arr.push_back(j);
      }
      out << arr.dump(2) << "\n";
    } else {
      out << std::left << std::setw(11) << "label" << std::setw(17)
          << "realization" << std::setw(5) << "a" << std::setw(5) << "b"
          << std::setw(5) << "c" << "\n";
      int hito_n = 0, celt_n = 0, both_n = 0, neither_n = 0;
      for (const CatalogueEntry& e : entries) {
        out << std::left << std::setw(11) << e.label << std::setw(17)
            << realization_class_text(e.realization) << std::setw(5)
            << axis_text(e.disp_a) << std::setw(5) << axis_text(e.disp_b)
            << std::setw(5) << axis_text(e.disp_c) << "\n";
        both_n += e.realization == RealizationClass::Both;
        neither_n += e.realization == RealizationClass::Neither;
        hito_n += e.hitomezashi_realizable;
        celt_n += e.celtic_realizable;
      }
      out << "total: " << entries.size() << " groups (hitomezashi " << hito_n
          << ", celtic " << celt_n << ", both " << both_n << ", neither "
          << neither_n << ")\n";
    }
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 64;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  }
  return rc;
}

}  // namespace hito::cli
