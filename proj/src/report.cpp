#include "quadcong/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <iomanip>

namespace quadcong {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string render_value(const ModInt& v, bool signed_residues) {
    return signed_residues ? std::to_string(v.signed_value())
                           : std::to_string(v.value());
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_str(const std::optional<u64>& v) {
    return v ? std::to_string(*v) : std::string();
}

ordered_json opt_json(const std::optional<u64>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json config_json(const SweepConfig& cfg) {
    ordered_json checks = ordered_json::array();
    for (ClaimId id : cfg.checks) checks.push_back(claim_name(id));
    return ordered_json{{"prime_min", cfg.prime_min},
                        {"prime_max", cfg.prime_max},
                        {"n_max", cfg.n_max},
                        {"checks", checks},
                        {"budget", cfg.size_budget},
                        {"jobs", cfg.jobs},
                        {"signed", cfg.signed_residues}};
}

}  // namespace

void write_csv(std::ostream& os, const SweepConfig& cfg,
               const SweepReport& report) {
    os << "claim_id,p,n,k,lhs,rhs,modulus,holds,note\n";
    for (const Verdict& v : report.verdicts) {
        os << claim_name(v.claim) << ',' << v.p << ',' << opt_str(v.n) << ','
           << opt_str(v.k) << ',' << render_value(v.lhs, cfg.signed_residues)
           << ',' << render_value(v.rhs, cfg.signed_residues) << ','
           << v.lhs.modulus() << ',' << (v.holds ? "true" : "false") << ','
           << csv_escape(v.note) << '\n';
    }
}

void write_json(std::ostream& os, const SweepConfig& cfg,
                const SweepReport& report) {
    ordered_json doc;
    doc["config"] = config_json(cfg);

    ordered_json verdicts = ordered_json::array();
    for (const Verdict& v : report.verdicts) {
        ordered_json jv{{"claim_id", claim_name(v.claim)},
                        {"p", v.p},
                        {"n", opt_json(v.n)},
                        {"k", opt_json(v.k)},
                        {"modulus", v.lhs.modulus()},
                        {"holds", v.holds},
                        {"note", v.note}};
        if (cfg.signed_residues) {
            jv["lhs"] = v.lhs.signed_value();
            jv["rhs"] = v.rhs.signed_value();
        } else {
            jv["lhs"] = v.lhs.value();
            jv["rhs"] = v.rhs.value();
        }
        verdicts.push_back(std::move(jv));
    }
    doc["verdicts"] = std::move(verdicts);

    ordered_json by_claim = ordered_json::object();
    for (const auto& [claim, tally] : report.summary())
        by_claim[claim_name(claim)] = {{"total", tally.total},
                                       {"failed", tally.failed}};
    doc["summary"] = {{"total", report.verdicts.size()},
                      {"failed", report.failures()},
                      {"skipped", report.skipped.size()},
                      {"by_claim", std::move(by_claim)}};

    ordered_json errata = ordered_json::array();
    for (const ErratumRecord& e : report.errata)
        errata.push_back({{"claim_id", claim_name(e.claim)},
                          {"p", opt_json(e.p)},
                          {"n", opt_json(e.n)},
                          {"k", opt_json(e.k)},
                          {"detail", e.detail}});
    doc["errata"] = std::move(errata);

    ordered_json skipped = ordered_json::array();
    for (const SkipRecord& s : report.skipped)
        skipped.push_back({{"claim_id", claim_name(s.claim)},
                           {"p", s.p},
                           {"n", opt_json(s.n)},
                           {"reason", s.reason}});
    doc["skipped"] = std::move(skipped);

    os << doc.dump(2) << '\n';
}

void write_table(std::ostream& os, const SweepConfig& cfg,
                 const SweepReport& report) {
    const char* cols[] = {"claim_id", "p",   "n",       "k",
                          "lhs",      "rhs", "modulus", "holds"};
    std::vector<std::array<std::string, 8>> rows;
    rows.reserve(report.verdicts.size());
    for (const Verdict& v : report.verdicts)
        rows.push_back({claim_name(v.claim), std::to_string(v.p), opt_str(v.n),
                        opt_str(v.k), render_value(v.lhs, cfg.signed_residues),
                        render_value(v.rhs, cfg.signed_residues),
                        std::to_string(v.lhs.modulus()),
                        v.holds ? "yes" : "NO"});
    size_t width[8];
    for (size_t c = 0; c < 8; c++) {
        width[c] = std::string(cols[c]).size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::array<std::string, 8>& r,
                    const std::string& note) {
        for (size_t c = 0; c < 8; c++)
            os << std::left << std::setw(int(width[c]) + 2) << r[c];
        if (!note.empty()) os << note;
        os << '\n';
    };
    std::array<std::string, 8> head;
    for (size_t c = 0; c < 8; c++) head[c] = cols[c];
    line(head, "note");
    for (size_t i = 0; i < rows.size(); i++)
        line(rows[i], report.verdicts[i].note);

    os << '\n'
       << report.verdicts.size() << " checks, " << report.failures()
       << " failed, " << report.skipped.size() << " skipped\n";
    for (const auto& [claim, tally] : report.summary()) {
        os << "  " << std::left << std::setw(16) << claim_name(claim)
           << tally.total - tally.failed << "/" << tally.total << " hold\n";
    }
    if (!report.skipped.empty()) {
        os << "skipped (size budget):\n";
        for (const SkipRecord& s : report.skipped) {
            os << "  " << claim_name(s.claim) << " p=" << s.p;
            if (s.n) os << " n=" << *s.n;
            os << ": " << s.reason << '\n';
        }
    }
    if (!report.errata.empty()) {
        os << "errata:\n";
        for (const ErratumRecord& e : report.errata) {
            os << "  [" << claim_name(e.claim);
            if (e.p) os << " p=" << *e.p;
            if (e.k) os << " k=" << *e.k;
            os << "] " << e.detail << '\n';
        }
    }
}

void write_report(std::ostream& os, const SweepConfig& cfg,
                  const SweepReport& report) {
    switch (cfg.format) {
        case OutputFormat::csv: write_csv(os, cfg, report); break;
        case OutputFormat::json: write_json(os, cfg, report); break;
        case OutputFormat::table: write_table(os, cfg, report); break;
    }
}

void write_csv(std::ostream& os, const SweepConfig&,
               const ErrataReport& report) {
    os << "item,claim_id,cases,statement_matches,printed_matches,winner,"
          "statement_form,printed_form\n";
    for (const ErrataItem& it : report.items)
        os << it.id << ',' << claim_name(it.claim) << ',' << it.cases << ','
           << it.statement_matches << ',' << it.printed_matches << ','
           << csv_escape(it.winner) << ',' << csv_escape(it.statement_form)
           << ',' << csv_escape(it.printed_form) << '\n';
}

void write_json(std::ostream& os, const SweepConfig& cfg,
                const ErrataReport& report) {
    ordered_json doc;
    doc["config"] = config_json(cfg);
    ordered_json items = ordered_json::array();
    for (const ErrataItem& it : report.items)
        items.push_back({{"item", it.id},
                         {"claim_id", claim_name(it.claim)},
                         {"description", it.description},
                         {"statement_form", it.statement_form},
                         {"printed_form", it.printed_form},
                         {"cases", it.cases},
                         {"statement_matches", it.statement_matches},
                         {"printed_matches", it.printed_matches},
                         {"winner", it.winner}});
    doc["items"] = std::move(items);
    os << doc.dump(2) << '\n';
}

void write_table(std::ostream& os, const SweepConfig&,
                 const ErrataReport& report) {
    for (const ErrataItem& it : report.items) {
        os << it.id << "  [" << claim_name(it.claim) << "]\n"
           << "  " << it.description << '\n'
           << "  statement: " << it.statement_form << '\n'
           << "  printed:   " << it.printed_form << '\n'
           << "  cases " << it.cases << ", statement matches "
           << it.statement_matches << ", printed matches "
           << it.printed_matches << "  ->  winner: " << it.winner << "\n\n";
    }
}

void write_report(std::ostream& os, const SweepConfig& cfg,
                  const ErrataReport& report) {
    switch (cfg.format) {
        case OutputFormat::csv: write_csv(os, cfg, report); break;
        case OutputFormat::json: write_json(os, cfg, report); break;
        case OutputFormat::table: write_table(os, cfg, report); break;
    }
}

}  // namespace quadcong
