#include "repdraw/epd.hpp"

#include <sstream>

namespace repdraw {

namespace {

// Splits "bm Rh8; id \"WAC.001\";" into opcode/operand pairs.
void parse_opcodes(const std::string& text, EpdRecord& rec) {
    std::istringstream in(text);
    std::string clause;
    while (std::getline(in, clause, ';')) {
        std::istringstream c(clause);
        std::string op;
        if (!(c >> op)) continue;
        std::string rest;
        std::getline(c, rest);
        // Trim blanks and surrounding quotes.
        std::size_t a = rest.find_first_not_of(" \t");
        std::size_t b = rest.find_last_not_of(" \t");
        rest = a == std::string::npos ? "" : rest.substr(a, b - a + 1);
        if (rest.size() >= 2 && rest.front() == '"' && rest.back() == '"')
            rest = rest.substr(1, rest.size() - 2);
        if (op == "bm") rec.bm = rest;
        else if (op == "id") rec.id = rest;
    }
}

}  // namespace

std::vector<EpdRecord> parse_epd(std::istream& in, std::vector<EpdError>& errors) {
    std::vector<EpdRecord> out;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream probe(line);
        std::string f1, f2, f3, f4;
        if (!(probe >> f1)) continue;   // blank line
        if (f1[0] == '#') continue;     // comment
        if (!(probe >> f2 >> f3 >> f4)) {
            errors.push_back({lineNo, "EPD: fewer than 4 FEN fields"});
            continue;
        }
        EpdRecord rec;
        rec.lineNo = lineNo;
        try {
            rec.position = parse_fen(f1 + " " + f2 + " " + f3 + " " + f4);
        } catch (const ParseError& e) {
            errors.push_back({lineNo, e.what()});
            continue;
        }
        std::string rest;
        std::getline(probe, rest);
        parse_opcodes(rest, rec);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace repdraw
