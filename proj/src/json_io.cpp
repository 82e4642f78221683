#include "dircut/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dircut {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}


template <typename T, typename F>
std::string list(const std::vector<T>& xs, F item) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += item(xs[i]);
    }
    return out + "]";
}

std::string num_list(const std::vector<double>& xs) {
    return list(xs, [](double v) { return num(v); });
}

std::string id_list(const std::vector<int>& xs) {
    return list(xs, [](int v) { return std::to_string(v); });
}

}  // namespace

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

std::string to_json(const FractionalSolution& sol) {
    std::string out = "{\"objective\":" + num(sol.objective);
    out += ",\"lengths\":" + num_list(sol.lengths);
    out += ",\"constraints\":" +
           list(sol.constraints, [](const PathConstraint& p) { return id_list(p.edges); });
    out += ",\"iterations\":" + std::to_string(sol.iterations) + "}";
    return out;
}

std::string to_json(const RadiusScan& scan) {
    std::string out = "{\"breakpoints\":" + num_list(scan.breakpoints);
    out += ",\"interval_cut_weights\":" + num_list(scan.interval_cut_weights);
    out += ",\"volumes\":" + num_list(scan.volumes);
    out += ",\"chosen_r\":" + num(scan.chosen_r);
    out += ",\"alpha\":" + num(scan.alpha);
    out += ",\"beta\":" + num(scan.beta);
    out += ",\"vstar\":" + num(scan.vstar) + "}";
    return out;
}

std::string to_json(const CutResult& cut, const Graph& g) {
    std::string out = "{\"weight\":" + num(cut.total_weight);
    out += ",\"edges\":" + list(cut.edges, [&](EdgeId e) {
        const Edge& ed = g.edge(e);
        return "[" + std::to_string(ed.tail) + "," + std::to_string(ed.head) + "," +
               num(ed.weight) + "]";
    });
    out += ",\"iterations\":" + list(cut.trace, [](const IterationRecord& it) {
        std::string rec = "{\"index\":" + std::to_string(it.index);
        rec += ",\"radius\":" + num(it.radius);
        rec += ",\"harvested\":" + id_list(it.harvested);
        rec += ",\"removal\":" + json_quote(removal_name(it.removal));
        rec += ",\"fallback_used\":" + std::string(it.fallback_used ? "true" : "false") + "}";
        return rec;
    });
    out += ",\"valid\":" + std::string(cut.valid ? "true" : "false") + "}";
    return out;
}

std::string to_json(const Report& r) {
    std::string out = "{\"id\":" + json_quote(r.id);
    out += ",\"kind\":" + json_quote(kind_name(r.kind));
    out += ",\"k\":" + std::to_string(r.k);
    out += ",\"vstar\":" + num(r.vstar);
    out += ",\"alg_weight\":" + num(r.alg_weight);
    out += ",\"valid\":" + std::string(r.valid ? "true" : "false");
    if (r.opt) out += ",\"opt\":" + num(*r.opt);
    out += ",\"ratio_alg_vstar\":" + num(r.ratio_alg_vstar);
    if (r.ratio_alg_opt) out += ",\"ratio_alg_opt\":" + num(*r.ratio_alg_opt);
    if (r.ratio_vstar_opt) out += ",\"ratio_vstar_opt\":" + num(*r.ratio_vstar_opt);
    out += ",\"bound\":" + num(r.bound);
    out += ",\"alpha\":" + num(r.alpha);
    out += ",\"beta\":" + num(r.beta) + "}";
    return out;
}

std::string to_json(const VerifyResult& res) {
    std::string out = "{\"ok\":" + std::string(res.ok ? "true" : "false");
    if (res.witness) {
        out += ",\"witness\":{\"from\":" + std::to_string(res.witness->from);
        out += ",\"to\":" + std::to_string(res.witness->to);
        out += ",\"vertices\":" + id_list(res.witness->vertices);
        out += ",\"edges\":" + id_list(res.witness->edges) + "}";
    }
    return out + "}";
}

std::string to_json(const ParamCheck& c) {
    std::string out = "{\"alpha\":" + num(c.alpha);
    out += ",\"beta\":" + num(c.beta);
    out += ",\"constraint\":" + num(c.constraint);
    out += ",\"slack\":" + num(c.slack);
    out += ",\"objective\":" + num(c.objective);
    out += ",\"feasible\":" + std::string(c.feasible ? "true" : "false") + "}";
    return out;
}

std::string report_table(const std::vector<BatchRow>& rows, bool with_summary) {
    const std::vector<std::string> header = {"id",      "kind",    "k",        "vstar",
                                             "alg",     "valid",   "opt",      "alg/vstar",
                                             "alg/opt", "vstar/opt", "bound"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header);
    auto opt_num = [](const std::optional<double>& v) { return v ? num(*v) : std::string("-"); };
    for (const BatchRow& row : rows) {
        if (!row.error.empty()) {
            std::vector<std::string> line(header.size(), "-");
            line[0] = row.report.id;
            line[1] = "error: " + row.error;
            cells.push_back(std::move(line));
            continue;
        }
        const Report& r = row.report;
        cells.push_back({r.id, kind_name(r.kind), std::to_string(r.k), num(r.vstar),
                         num(r.alg_weight), r.valid ? "yes" : "NO", opt_num(r.opt),
                         num(r.ratio_alg_vstar), opt_num(r.ratio_alg_opt),
                         opt_num(r.ratio_vstar_opt), num(r.bound)});
    }
    const bool any_data =
        std::any_of(rows.begin(), rows.end(), [](const BatchRow& r) { return r.error.empty(); });
    if (with_summary && any_data) {
        // max / mean per ratio column, over rows where the value exists
        auto agg = [&](auto pick) -> std::pair<std::string, std::string> {
            double mx = 0.0, sum = 0.0;
            int count = 0;
            for (const BatchRow& row : rows) {
                if (!row.error.empty()) continue;
                std::optional<double> v = pick(row.report);
                if (!v) continue;
                mx = count ? std::max(mx, *v) : *v;
                sum += *v;
                ++count;
            }
            if (!count) return {"-", "-"};
            return {num(mx), num(sum / count)};
        };
        auto [mx1, mean1] = agg([](const Report& r) { return std::optional<double>(r.ratio_alg_vstar); });
        auto [mx2, mean2] = agg([](const Report& r) { return r.ratio_alg_opt; });
        auto [mx3, mean3] = agg([](const Report& r) { return r.ratio_vstar_opt; });
        cells.push_back({"max", "", "", "", "", "", "", mx1, mx2, mx3, ""});
        cells.push_back({"mean", "", "", "", "", "", "", mean1, mean2, mean3, ""});
    }

    std::vector<size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream os;
    for (const auto& line : cells) {
        std::string text;
        for (size_t c = 0; c < line.size(); ++c) {
            if (c) text += "  ";
            text += line[c];
            if (c + 1 < line.size()) text += std::string(width[c] - line[c].size(), ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << '\n';
    }
    return os.str();
}

std::vector<EdgeId> parse_cut_file(const std::string& text, const Graph& g) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("cut file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        throw std::invalid_argument("cut file must be an object with an \"edges\" array");
    std::vector<EdgeId> out;
    std::vector<char> used(static_cast<size_t>(g.num_edges()), 0);
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number())
            throw std::invalid_argument("each cut edge must be a [tail, head, weight] triple");
        int tail = item[0].get<int>();
        int head = item[1].get<int>();
        double weight = item[2].get<double>();
        EdgeId found = -1;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            if (!used[static_cast<size_t>(e)] && ed.tail == tail && ed.head == head &&
                std::abs(ed.weight - weight) <= 1e-9) {
                found = e;
                break;
            }
        }
        if (found < 0)
            throw std::invalid_argument("cut edge [" + std::to_string(tail) + "," +
                                        std::to_string(head) + "," + num(weight) +
                                        "] not found in instance");
        used[static_cast<size_t>(found)] = 1;
        out.push_back(found);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dircut
