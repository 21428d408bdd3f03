#include "lrgen/tableau.hpp"

#include <cctype>

namespace lrgen {

LRTableau make(Partition gamma, Partition beta) {
    if (!contains(beta, gamma))
        throw NotContained("gamma=" + to_string(gamma) + " is not contained in beta=" +
                           to_string(beta));
    for (int i = 1; i <= beta.length(); ++i) {
        if (beta.part(i) > gamma.part(i) + 1)
            throw NotHorizontalStrip("row " + std::to_string(i) + ": beta_i=" +
                                     std::to_string(beta.part(i)) + " > gamma_i+1=" +
                                     std::to_string(gamma.part(i) + 1));
    }
    LRTableau t;
    t.gamma_ = std::move(gamma);
    t.beta_ = std::move(beta);
    return t;
}

ExtTableau::ExtTableau(LRTableau t, int n) : tab(std::move(t)), free(n) {
    if (n < 0)
        throw Error("ExtTableau: free counter must be non-negative");
}

std::vector<int> entry_rows(const LRTableau& t) {
    std::vector<int> rows;
    for (int i = 1; i <= t.beta().length(); ++i)
        if (t.beta().part(i) == t.gamma().part(i) + 1)
            rows.push_back(i);
    return rows;
}

std::vector<int> empty_rows(const LRTableau& t) {
    std::vector<int> rows;
    for (int i = 1; i <= t.beta().length(); ++i)
        if (t.beta().part(i) == t.gamma().part(i))
            rows.push_back(i);
    return rows;
}

namespace {

std::string render_shapes(const Partition& gamma, const Partition& beta) {
    std::string out;
    for (int i = 1; i <= beta.length(); ++i) {
        out.append(static_cast<std::size_t>(gamma.part(i)), '.');
        out.append(static_cast<std::size_t>(beta.part(i) - gamma.part(i)), '1');
        out += '\n';
    }
    return out;
}

} // namespace

std::string render(const LRTableau& t, RenderConvention convention) {
    if (convention == RenderConvention::Definition)
        return render_shapes(t.gamma(), t.beta());
    // The drawn figures transpose the diagram: row lengths become dual(beta)
    // and the entry cells are the cells of dual(beta) not in dual(gamma).
    return render_shapes(dual(t.gamma()), dual(t.beta()));
}

std::string to_string(const LRTableau& t) {
    return "beta=" + to_string(t.beta()) + ";gamma=" + to_string(t.gamma());
}

std::string to_string(const ExtTableau& t) {
    std::string out = to_string(t.tab);
    if (t.free > 0)
        out += ";free=" + std::to_string(t.free);
    return out;
}

namespace {

struct FieldSplit {
    std::string key;
    std::string value;
    std::size_t value_offset;
};

std::vector<FieldSplit> split_fields(const std::string& text) {
    std::vector<FieldSplit> fields;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos)
            end = text.size();
        std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos || eq > end)
            throw ParseError("expected 'key=value'", pos);
        std::size_t kb = pos, ke = eq;
        while (kb < ke && std::isspace(static_cast<unsigned char>(text[kb])))
            ++kb;
        while (ke > kb && std::isspace(static_cast<unsigned char>(text[ke - 1])))
            --ke;
        fields.push_back({text.substr(kb, ke - kb), text.substr(eq + 1, end - eq - 1), eq + 1});
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return fields;
}

} // namespace

bool has_free_field(const std::string& text) {
    for (const auto& f : split_fields(text))
        if (f.key == "free")
            return true;
    return false;
}

ExtTableau parse_tableau(const std::string& text) {
    auto fields = split_fields(text);
    if (fields.empty() || fields[0].key != "beta")
        throw ParseError("expected 'beta=' first", 0);
    if (fields.size() < 2 || fields[1].key != "gamma")
        throw ParseError("expected 'gamma=' after beta", fields[0].value_offset);
    Partition beta = parse_partition(fields[0].value, kDefaultMaxPart, fields[0].value_offset);
    Partition gamma = parse_partition(fields[1].value, kDefaultMaxPart, fields[1].value_offset);
    int free = 0;
    if (fields.size() >= 3) {
        if (fields[2].key != "free")
            throw ParseError("unknown field '" + fields[2].key + "'", fields[2].value_offset);
        if (fields.size() > 3)
            throw ParseError("trailing fields after 'free'", fields[3].value_offset);
        Partition f = parse_partition(fields[2].value, kDefaultMaxPart, fields[2].value_offset);
        if (f.length() > 1)
            throw ParseError("free must be a single number", fields[2].value_offset);
        free = f.empty() ? 0 : f.part(1);
    }
    return ExtTableau(make(std::move(gamma), std::move(beta)), free);
}

} // namespace lrgen
