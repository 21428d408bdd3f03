#include "lrgen/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace lrgen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error("Partition: part " + std::to_string(i + 1) + " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("Partition: parts increase at index " + std::to_string(i + 1));
    }
}

Partition dual(const Partition& p) {
    std::vector<int> out;
    if (!p.empty()) {
        out.resize(static_cast<std::size_t>(p.part(1)));
        for (int i = 1; i <= static_cast<int>(out.size()); ++i) {
            int count = 0;
            for (int x : p.parts())
                if (x >= i)
                    ++count;
            out[static_cast<std::size_t>(i - 1)] = count;
        }
    }
    return Partition(std::move(out));
}

Partition sum(const Partition& p, const Partition& q) {
    int n = std::max(p.length(), q.length());
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        out[static_cast<std::size_t>(i - 1)] = p.part(i) + q.part(i);
    // non-increasing inputs give a non-increasing result; Partition() asserts it
    return Partition(std::move(out));
}

Partition union_parts(const Partition& p, const Partition& q) {
    std::vector<int> out;
    out.reserve(p.parts().size() + q.parts().size());
    out.insert(out.end(), p.parts().begin(), p.parts().end());
    out.insert(out.end(), q.parts().begin(), q.parts().end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return Partition(std::move(out));
}

std::int64_t weight(const Partition& p) {
    std::int64_t w = 0;
    for (int x : p.parts())
        w += x;
    return w;
}

bool contains(const Partition& p, const Partition& q) {
    for (int i = 1; i <= q.length(); ++i)
        if (q.part(i) > p.part(i))
            return false;
    return true;
}

Partition parse_partition(const std::string& text, int max_part, std::size_t offset) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (pos == text.size())
        return Partition{};

    std::vector<int> parts;
    for (;;) {
        skip_ws();
        std::size_t start = pos;
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a number", offset + pos);
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > max_part)
                throw ParseError("part exceeds the limit " + std::to_string(max_part),
                                 offset + start);
            ++pos;
        }
        parts.push_back(static_cast<int>(value));
        skip_ws();
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw ParseError("expected ',' between parts", offset + pos);
        ++pos;
    }

    if (parts.size() == 1 && parts[0] == 0)
        return Partition{};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw ParseError("zero part inside a partition", offset);
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("parts must be non-increasing", offset);
    }
    return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
    if (p.empty())
        return "0";
    std::string out;
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1)
            out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

} // namespace lrgen
