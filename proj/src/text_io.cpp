#include <bernmom/text_io.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bernmom
{

namespace
{

struct Line
{
    int number;
    std::vector<std::string> words;
};

// Non-empty lines split on whitespace, comments removed.
std::vector<Line> read_lines(std::istream &in)
{
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string w; ss >> w;) {
            line.words.push_back(w);
        }
        if (!line.words.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

[[noreturn]] void fail(const Line &line, const std::string &what)
{
    throw std::invalid_argument("line " + std::to_string(line.number) + ": " + what);
}

long parse_long(const std::string &text)
{
    long v = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    return v;
}

int read_dimension(const std::vector<Line> &lines)
{
    if (lines.empty()) {
        throw std::invalid_argument("empty input: expected 'n <int>'");
    }
    const Line &first = lines.front();
    if (first.words.size() != 2 || first.words[0] != "n") {
        fail(first, "expected 'n <int>'");
    }
    try {
        return static_cast<int>(parse_long(first.words[1]));
    } catch (const std::invalid_argument &e) {
        fail(first, e.what());
    }
}

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

} // namespace

std::string format_spectrum(const Spectrum &s)
{
    std::string out = "n " + std::to_string(s.n()) + "\n";
    for (const auto &[alpha, m] : s.entries()) {
        out += "alpha " + to_string(alpha) + " mult " + to_string(m) + "\n";
    }
    return out;
}

Spectrum parse_spectrum(std::istream &in)
{
    const auto lines = read_lines(in);
    const int n = read_dimension(lines);
    std::vector<Spectrum::Entry> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line &line = lines[i];
        if (line.words.size() != 4 || line.words[0] != "alpha" || line.words[2] != "mult") {
            fail(line, "expected 'alpha <p/q> mult <p/q>'");
        }
        try {
            entries.emplace_back(parse_rational(line.words[1]), parse_rational(line.words[3]));
        } catch (const std::invalid_argument &e) {
            fail(line, e.what());
        }
    }
    return spectrum_abstract(n, std::move(entries));
}

std::string format_chern(const ChernData &x)
{
    std::string out = "n " + std::to_string(x.n()) + "\n";
    for (const auto &[parts, value] : x.numbers()) {
        std::string key;
        for (int p : parts) {
            key += (key.empty() ? "" : ",") + std::to_string(p);
        }
        out += "partition " + key + " value " + to_string(value) + "\n";
    }
    return out;
}

ChernData parse_chern(std::istream &in)
{
    const auto lines = read_lines(in);
    const int n = read_dimension(lines);
    std::map<ChernData::Partition, Rational> numbers;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line &line = lines[i];
        if (line.words.size() != 4 || line.words[0] != "partition" || line.words[2] != "value") {
            fail(line, "expected 'partition j1,j2,... value <p/q>'");
        }
        try {
            ChernData::Partition parts;
            for (const auto &p : split(line.words[1], ',')) {
                parts.push_back(static_cast<int>(parse_long(p)));
            }
            std::sort(parts.begin(), parts.end(), std::greater<>());
            if (!numbers.emplace(parts, parse_rational(line.words[3])).second) {
                fail(line, "repeated partition");
            }
        } catch (const std::invalid_argument &e) {
            fail(line, e.what());
        }
    }
    return ChernData(n, std::move(numbers));
}

std::vector<std::pair<long, long>> parse_puiseux(const std::string &text)
{
    std::vector<std::pair<long, long>> pairs;
    for (const auto &item : split(text, ',')) {
        const auto nr = split(item, ':');
        if (nr.size() != 2) {
            throw std::invalid_argument("Puiseux pair must look like n:r, got '" + item + "'");
        }
        pairs.emplace_back(parse_long(nr[0]), parse_long(nr[1]));
    }
    return pairs;
}

std::vector<Integer> parse_integer_list(const std::string &text)
{
    std::vector<Integer> out;
    for (const auto &q : parse_rational_list(text)) {
        if (!is_integer(q)) {
            throw std::invalid_argument("expected an integer, got " + to_string(q));
        }
        out.push_back(q.get_num());
    }
    return out;
}

} // namespace bernmom
