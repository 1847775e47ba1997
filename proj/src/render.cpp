#include "tslice/render.hpp"

#include <json.hpp>

#include <sstream>

namespace tslice {

namespace {

std::string cell_text(const Cell& c) {
    if (auto* s = std::get_if<std::string>(&c)) return *s;
    if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<Rational>(c).str();
}

std::string cell_csv(const Cell& c) {
    std::string raw;
    if (auto* s = std::get_if<std::string>(&c)) raw = *s;
    else if (auto* i = std::get_if<long long>(&c)) raw = std::to_string(*i);
    else raw = std::get<Rational>(c).str_slash();
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char ch : raw) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string render_text(const Doc& doc) {
    std::ostringstream out;
    out << doc.group_label << " : " << doc.command << "\n";
    for (const Section& sec : doc.sections) {
        out << "\n" << sec.name << "\n";
        std::vector<std::size_t> width(sec.columns.size());
        for (std::size_t c = 0; c < sec.columns.size(); ++c) width[c] = sec.columns[c].size();
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : sec.rows) {
            std::vector<std::string> r;
            for (std::size_t c = 0; c < row.size(); ++c) {
                r.push_back(cell_text(row[c]));
                if (c < width.size()) width[c] = std::max(width[c], r.back().size());
            }
            cells.push_back(std::move(r));
        }
        auto emit_row = [&](const std::vector<std::string>& r) {
            std::string line;
            for (std::size_t c = 0; c < r.size(); ++c) {
                std::string f = r[c];
                if (c + 1 < r.size() && c < width.size()) f.resize(width[c], ' ');
                line += c ? "  " + f : f;
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out << "  " << line << "\n";
        };
        emit_row(sec.columns);
        for (const auto& r : cells) emit_row(r);
    }
    return out.str();
}

std::string render_json(const Doc& doc) {
    nlohmann::ordered_json j;
    j["group"] = doc.group_label;
    j["command"] = doc.command;
    j["rows"] = nlohmann::ordered_json::array();
    for (const Section& sec : doc.sections)
        for (const auto& row : sec.rows) {
            nlohmann::ordered_json r;
            r["section"] = sec.name;
            for (std::size_t c = 0; c < row.size() && c < sec.columns.size(); ++c) {
                const Cell& cell = row[c];
                if (auto* s = std::get_if<std::string>(&cell)) r[sec.columns[c]] = *s;
                else if (auto* i = std::get_if<long long>(&cell)) r[sec.columns[c]] = *i;
                else {
                    const Rational& q = std::get<Rational>(cell);
                    r[sec.columns[c]] =
                        nlohmann::ordered_json{{"num", q.num_ll()}, {"den", q.den_ll()}};
                }
            }
            j["rows"].push_back(std::move(r));
        }
    return j.dump(2) + "\n";
}

std::string render_csv(const Doc& doc) {
    std::ostringstream out;
    for (const Section& sec : doc.sections) {
        out << "# " << sec.name << "\n";
        for (std::size_t c = 0; c < sec.columns.size(); ++c)
            out << (c ? "," : "") << cell_csv(Cell{sec.columns[c]});
        out << "\n";
        for (const auto& row : sec.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << cell_csv(row[c]);
            out << "\n";
        }
    }
    return out.str();
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw ParseError("unknown format '" + name + "'", 0);
}

std::string render(const Doc& doc, Format fmt) {
    switch (fmt) {
    case Format::Text: return render_text(doc);
    case Format::Json: return render_json(doc);
    case Format::Csv: return render_csv(doc);
    }
    throw Error("render: bad format");
}

} // namespace tslice
