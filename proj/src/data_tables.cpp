#include "ikeda/data_tables.hpp"

#include <sstream>

namespace ikeda::data {

// Transcribed eigenvalue formulas.  `printed` is the source display
// kept character-for-character (TeX); `machine` is the same expression
// with divisions rewritten as negative powers.  The T1(p^2) display
// has a stray ')' after the p^{4k-7} term, so its machine form is the
// best-effort reading "-(p^{4k-6}+p^{4k-7})(a^2+a^-2+3)" and the row
// is flagged; it never enters symbolic identity checks.
const std::vector<FormulaRecord>& eigenvalue_formulas() {
    static const std::vector<FormulaRecord> recs = {
        {"T(p)",
         R"(p^{2k-1}(a^2+\frac{1}{a^2}+\frac{a \left(p^3+p^2+p+1\right)}{p^{3/2}}+\frac{p^3+p^2+p+1}{a p^{3/2}}+p^2+\frac{1}{p^2}+p+\frac{1}{p}+2))",
         "p^(2k-1)*(a^2+a^-2+a*p^(-3/2)*(p^3+p^2+p+1)+a^-1*p^(-3/2)*(p^3+p^2+p+1)"
         "+p^2+p^-2+p+p^-1+2)",
         ""},
        {"T1(p^2)",
         R"(p^{4k}+p^{4k-10}+p^{4k-4} + (a+\frac{1}{a})(p^{4k+\frac{1}{2}}+2p^{4k-\frac{1}{2}}-p^{4k-\frac{11}{2}}-p^{4k-\frac{13}{2}}-p^{4k-\frac{15}{2}}) +(a+\frac{1}{a})^2(p^{4k-1}+p^{4k-2}+p^{4k-3}-p^{4k-5}) -p^{4k-6}-p^{4k-7})(a^2+\frac{1}{a^2}+3) -p^{4k-8}-p^{4k-10} +p^{4k-\frac{7}{2}}(a+\frac{1}{a})^3-p^{4k-6}(a^2+3+\frac{1}{a^2})+(p^{4k-\frac{5}{2}}+p^{4k-\frac{3}{2}})(a^3+4a+4\frac{1}{a}+\frac{1}{a^3}))",
         "p^(4k)+p^(4k-10)+p^(4k-4)"
         "+(a+a^-1)*(p^(4k+1/2)+2*p^(4k-1/2)-p^(4k-11/2)-p^(4k-13/2)-p^(4k-15/2))"
         "+(a+a^-1)^2*(p^(4k-1)+p^(4k-2)+p^(4k-3)-p^(4k-5))"
         "-(p^(4k-6)+p^(4k-7))*(a^2+a^-2+3)"
         "-p^(4k-8)-p^(4k-10)"
         "+p^(4k-7/2)*(a+a^-1)^3-p^(4k-6)*(a^2+3+a^-2)"
         "+(p^(4k-5/2)+p^(4k-3/2))*(a^3+4*a+4*a^-1+a^-3)",
         "as-printed form is unbalanced: stray ')' after the p^{4k-7} term; machine "
         "form is a best-effort reading and stays out of identity tests"},
        {"T2(p^2)",
         R"(p^{4k-2}+ (a+\frac{1}{a})(p^{4k-\frac{7}{2}}+p^{4k-\frac{9}{2}}+p^{4k-\frac{11}{2}}-p^{4k-\frac{15}{2}}-p^{4k-\frac{17}{2}}-p^{4k-\frac{19}{2}}) (a+\frac{1}{a})^2(p^{4k-3}+2p^{4k-4}+p^{4k-6}+p^{4k-7}) +p^{4k-4}(a^2+\frac{1}{a^2}+3) -p^{4k-8}-p^{4k-10})",
         "p^(4k-2)"
         "+(a+a^-1)*(p^(4k-7/2)+p^(4k-9/2)+p^(4k-11/2)-p^(4k-15/2)-p^(4k-17/2)-p^(4k-19/2))"
         "+(a+a^-1)^2*(p^(4k-3)+2*p^(4k-4)+p^(4k-6)+p^(4k-7))"
         "+p^(4k-4)*(a^2+a^-2+3)-p^(4k-8)-p^(4k-10)",
         "a '+' is implied at the display break before the (a+1/a)^2 group"},
        {"T3(p^2)",
         R"(\frac{\left(p^3+p^2+p+1\right) \left(a^2 p^{5/2}+a (p-1)+p^{5/2}\right) p^{4 (k-3)}}{a})",
         "(p^3+p^2+p+1)*(a^2*p^(5/2)+a*(p-1)+p^(5/2))*p^(4k-12)*a^-1",
         ""},
    };
    return recs;
}

namespace {

const std::string kUnbalancedFlag =
    "printed row opens an extra '(' and attaches ^{-1} to the last factor only; "
    "read uniformly as numerator times the inverse of the whole factor list";

std::vector<ResidueRow> build_residue_rows() {
    std::vector<ResidueRow> t;
    t.push_back({"a1", "1", "1", "1", 2, "-a^6*p^7",
                 {"(a^2-1)^2", "(p-1)^4", "(p+1)^2", "(a-p^(1/2))^2", "(a*p^(1/2)-1)^2",
                  "(a-p^(3/2))^2", "(a*p^(3/2)-1)^2"},
                 ""});
    t.push_back({"a2", "1", "1", "1", 1, "7*a^6*p^7",
                 {"(a^2-1)^2", "(p-1)^4", "(p+1)^2", "(a-p^(1/2))^2", "(a*p^(1/2)-1)^2",
                  "(a-p^(3/2))^2", "(a*p^(3/2)-1)^2"},
                 ""});
    t.push_back({"a3", "a*p^(1/2)", "1", "1", 1, "a^2*p^(9/2)",
                 {"a^2-1", "(p-1)^3", "p+1", "(a-p^(1/2))^3", "a+p^(1/2)", "(a*p^(1/2)-1)^3",
                  "a*p^(1/2)+1", "a^3*p^(1/2)-1", "a-p^(3/2)", "a*p^(3/2)-1", "a^2*p^2-1",
                  "a*p^(5/2)-1"},
                 ""});
    t.push_back({"a4", "a*p^(3/2)", "1", "1", 1, "-a^2*p^2",
                 {"a^2-1", "(p-1)^3", "p+1", "p^2+p+1", "a-p^(1/2)", "(a*p^(1/2)-1)^3",
                  "a*p^(1/2)+1", "a-p^(3/2)", "(a*p^(3/2)-1)^3", "a^2*p^2-1", "a*p^(5/2)-1",
                  "a^3*p^(5/2)+a^2*p^2+a^2*p+a*p^(3/2)+a*p^(1/2)+1", "a*p^(7/2)-1"},
                 ""});
    t.push_back({"a5", "p^2", "1", "1", 1, "-a^6*p^2",
                 {"(p-1)^5", "(p+1)^3", "p^2+1", "p^2+p+1", "a-p^(1/2)", "a*p^(1/2)-1",
                  "a-p^(3/2)", "a*p^(3/2)-1", "a^2-p^2", "a^2*p^2-1", "a-p^(5/2)",
                  "a*p^(5/2)-1", "a-p^(7/2)", "a*p^(7/2)-1"},
                 ""});
    t.push_back({"a6", "p^(1/2)", "1", "a", 1, "a^17*p^(9/2)",
                 {"a^2-1", "(p-1)^3", "p+1", "(a-p^(1/2))^3", "a^3-p^(1/2)", "a+p^(1/2)",
                  "(a*p^(1/2)-1)^3", "a*p^(1/2)+1", "a-p^(3/2)", "a*p^(3/2)-1", "a^2-p^2",
                  "a-p^(5/2)"},
                 "printed pole (-p^(1/2) + p^(2k-1)x) is not a reciprocal of a spin root; "
                 "the series expansion printed for this row carries a^r p^{-(r+1)/2}, which "
                 "pins the intended pole to (-p^(1/2) + a p^(2k-1)x)"});
    t.push_back({"a7", "1", "a^2", "a^2", 1, "-a^32*p^7",
                 {"(a^2-1)^3", "a^2+1", "(a-p^(1/2))^3", "a^3-p^(1/2)", "a+p^(1/2)",
                  "(a*p^(1/2)-1)^3", "a*p^(1/2)+1", "a^3*p^(1/2)-1", "a^2+a*p^(1/2)+p",
                  "a^2*p+a*p^(1/2)+1", "a-p^(3/2)", "a*p^(3/2)-1", "a^2-p^2", "a^2*p^2-1"},
                 ""});
    t.push_back({"a8", "a", "p^(1/2)", "p^(1/2)", 1, "-a^2*p^12",
                 {"a^2-1", "(p-1)^3", "p+1", "(a-p^(1/2))^3", "a^3-p^(1/2)", "a+p^(1/2)",
                  "(a*p^(1/2)-1)^3", "a*p^(1/2)+1", "a-p^(3/2)", "a*p^(3/2)-1", "a^2-p^2",
                  "a-p^(5/2)"},
                 ""});
    t.push_back({"a9", "1", "a*p^(1/2)", "a*p^(1/2)", 1, "-a^17*p^12",
                 {"a^2-1", "(p-1)^3", "p+1", "(a-p^(1/2))^3", "a+p^(1/2)", "(a*p^(1/2)-1)^3",
                  "a^4*p+a^3*p^(1/2)-a*p^(1/2)-1", "a-p^(3/2)", "a*p^(3/2)-1",
                  "a^3*p^(9/2)-a^2*p^2-a*p^(5/2)+1"},
                 ""});
    t.push_back({"a10", "1", "p", "p", 1, "-a^6*p^18",
                 {"(p-1)^5", "p+1", "p^2+p+1", "(a-p^(1/2))^3", "a+p^(1/2)", "(a*p^(1/2)-1)^3",
                  "a*p^(1/2)+1", "a-p^(3/2)", "a*p^(3/2)-1", "a-p^(5/2)", "a*p^(5/2)-1"},
                 ""});
    t.push_back({"a11", "a", "p^(3/2)", "p^(3/2)", 1, "a^2*p^(49/2)",
                 {"a^2-1", "(p-1)^3", "p+1", "p^2+p+1", "a*p^(1/2)-1",
                  "(a^2-a*p^(3/2)-a*p^(1/2)+p^2)^3",
                  "a^4+a^3*p^(3/2)+2*a^3*p^(1/2)+2*a^2*p^2+2*a^2*p+a*p^(3/2)+2*a*p^(5/2)+p^3",
                  "a^5*p^(3/2)-a^4*p^5-a^4*p^4-a^4+a^3*p^(5/2)+a^3*p^(15/2)+a^2*p^7+a^2*p^2"
                  "-a*p^(9/2)-a*p^(11/2)-a*p^(19/2)+p^8"},
                 kUnbalancedFlag});
    t.push_back({"a12", "1", "a*p^(3/2)", "a*p^(3/2)", 1, "a^17*p^(49/2)",
                 {"a^2-1", "(p-1)^3", "p+1", "p^2+p+1", "a-p^(1/2)", "(a*p^(1/2)-1)^3",
                  "a*p^(1/2)+1", "a^2*p+a*p^(1/2)+1", "a-p^(3/2)", "(a*p^(3/2)-1)^3",
                  "a*p^(3/2)+1", "a^2*p^2-1", "a*p^(5/2)-1", "a*p^(7/2)-1"},
                 kUnbalancedFlag});
    t.push_back(
        {"a13", "1", "p^2", "p^2", 1, "a^6*p^32",
         {"(p-1)^5", "(p+1)^3", "p^4+p^3+2*p^2+p+1",
          "a^7*p^(3/2)+a^5*p^(3/2)-a^9*p^(5/2)+a^7*p^(5/2)+a^5*p^(5/2)-a^3*p^(5/2)"
          "-a^9*p^(7/2)+2*a^7*p^(7/2)+2*a^5*p^(7/2)-a^3*p^(7/2)"
          "-a^9*p^(9/2)+3*a^7*p^(9/2)+3*a^5*p^(9/2)-a^3*p^(9/2)"
          "-2*a^9*p^(11/2)+3*a^7*p^(11/2)+3*a^5*p^(11/2)-2*a^3*p^(11/2)"
          "-a^11*p^(13/2)-3*a^9*p^(13/2)+3*a^7*p^(13/2)+3*a^5*p^(13/2)-3*a^3*p^(13/2)-a*p^(13/2)"
          "-a^11*p^(15/2)-4*a^9*p^(15/2)+3*a^7*p^(15/2)+3*a^5*p^(15/2)-4*a^3*p^(15/2)-a*p^(15/2)"
          "-a^11*p^(17/2)-4*a^9*p^(17/2)+3*a^7*p^(17/2)+3*a^5*p^(17/2)-4*a^3*p^(17/2)-a*p^(17/2)"
          "-a^11*p^(19/2)-4*a^9*p^(19/2)+4*a^7*p^(19/2)+4*a^5*p^(19/2)-4*a^3*p^(19/2)-a*p^(19/2)"
          "-a^11*p^(21/2)-4*a^9*p^(21/2)+4*a^7*p^(21/2)+4*a^5*p^(21/2)-4*a^3*p^(21/2)-a*p^(21/2)"
          "-a^11*p^(23/2)-4*a^9*p^(23/2)+3*a^7*p^(23/2)+3*a^5*p^(23/2)-4*a^3*p^(23/2)-a*p^(23/2)"
          "-a^11*p^(25/2)-4*a^9*p^(25/2)+3*a^7*p^(25/2)+3*a^5*p^(25/2)-4*a^3*p^(25/2)-a*p^(25/2)"
          "-a^11*p^(27/2)-3*a^9*p^(27/2)+3*a^7*p^(27/2)+3*a^5*p^(27/2)-3*a^3*p^(27/2)-a*p^(27/2)"
          "-2*a^9*p^(29/2)+3*a^7*p^(29/2)+3*a^5*p^(29/2)-2*a^3*p^(29/2)"
          "-a^9*p^(31/2)+3*a^7*p^(31/2)+3*a^5*p^(31/2)-a^3*p^(31/2)"
          "-a^9*p^(33/2)+2*a^7*p^(33/2)+2*a^5*p^(33/2)-a^3*p^(33/2)"
          "-a^9*p^(35/2)+a^7*p^(35/2)+a^5*p^(35/2)-a^3*p^(35/2)"
          "+a^7*p^(37/2)+a^5*p^(37/2)+a^7*p^(39/2)+a^5*p^(39/2)"
          "-a^6*p^20-a^6*p^19-2*a^6*p^18-3*a^6*p^17"
          "+a^10*p^16-4*a^6*p^16+a^2*p^16"
          "+a^10*p^15+a^8*p^15-4*a^6*p^15+a^4*p^15+a^2*p^15"
          "+2*a^10*p^14+a^8*p^14-5*a^6*p^14+a^4*p^14+2*a^2*p^14"
          "+2*a^10*p^13+a^8*p^13-6*a^6*p^13+a^4*p^13+2*a^2*p^13"
          "+2*a^10*p^12+a^8*p^12-7*a^6*p^12+a^4*p^12+2*a^2*p^12"
          "+3*a^10*p^11+2*a^8*p^11-6*a^6*p^11+2*a^4*p^11+3*a^2*p^11"
          "+a^12*p^10+4*a^10*p^10+3*a^8*p^10-6*a^6*p^10+3*a^4*p^10+4*a^2*p^10+p^10"
          "+3*a^10*p^9+2*a^8*p^9-6*a^6*p^9+2*a^4*p^9+3*a^2*p^9"
          "+2*a^10*p^8+a^8*p^8-7*a^6*p^8+a^4*p^8+2*a^2*p^8"
          "+2*a^10*p^7+a^8*p^7-6*a^6*p^7+a^4*p^7+2*a^2*p^7"
          "+2*a^10*p^6+a^8*p^6-5*a^6*p^6+a^4*p^6+2*a^2*p^6"
          "+a^10*p^5+a^8*p^5-4*a^6*p^5+a^4*p^5+a^2*p^5"
          "+a^10*p^4-4*a^6*p^4+a^2*p^4"
          "-3*a^6*p^3-2*a^6*p^2-a^6*p-a^6+a^7*p^(1/2)+a^5*p^(1/2)"},
         kUnbalancedFlag + "; compared numerically, not symbolically"});
    t.push_back({"a14", "a^2", "1", "1", 1, "a^2*p^7",
                 {"(a^2-1)^3", "a^2+1", "(a-p^(1/2))^3", "a^3-p^(1/2)", "a+p^(1/2)",
                  "(a*p^(1/2)-1)^3", "a*p^(1/2)+1", "a^3*p^(1/2)-1", "a^2+a*p^(1/2)+p",
                  "a^2*p+a*p^(1/2)+1", "a-p^(3/2)", "a*p^(3/2)-1", "a^2-p^2", "a^2*p^2-1"},
                 ""});
    t.push_back({"a15", "p", "1", "1", 1, "a^6*p^3",
                 {"(p-1)^5", "p+1", "p^2+p+1", "(a-p^(1/2))^3", "a+p^(1/2)", "(a*p^(1/2)-1)^3",
                  "a*p^(1/2)+1", "a-p^(3/2)", "a*p^(3/2)-1", "a-p^(5/2)", "a*p^(5/2)-1"},
                 ""});
    t.push_back({"a16", "p^(3/2)", "a", "a", 1, "-a^17*p^2",
                 {"a^2-1", "(p-1)^3", "p+1", "p^2+p+1", "(a-p^(1/2))^3", "a+p^(1/2)",
                  "a*p^(1/2)-1", "a^2+a*p^(1/2)+p", "(a-p^(3/2))^3", "a+p^(3/2)", "a*p^(3/2)-1",
                  "a^2-p^2", "a-p^(5/2)", "a-p^(7/2)"},
                 ""});
    return t;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

const std::vector<ResidueRow>& residue_table() {
    static const std::vector<ResidueRow> rows = build_residue_rows();
    return rows;
}

std::string residue_table_json() {
    std::ostringstream os;
    os << "{\n  \"rows\": [\n";
    const auto& rows = residue_table();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << "    {\n";
        os << "      \"index\": " << i + 1 << ",\n";
        os << "      \"label\": \"" << r.label << "\",\n";
        os << "      \"pole\": {\"b\": \"" << json_escape(r.pole_b) << "\", \"c\": \""
           << json_escape(r.pole_c) << "\", \"c_used\": \"" << json_escape(r.pole_c_used)
           << "\"},\n";
        os << "      \"order\": " << r.order << ",\n";
        os << "      \"numerator\": \"" << json_escape(r.numerator) << "\",\n";
        os << "      \"denominator\": [";
        for (std::size_t j = 0; j < r.denominator.size(); ++j) {
            if (j) os << ", ";
            os << "\"" << json_escape(r.denominator[j]) << "\"";
        }
        os << "],\n";
        os << "      \"flag\": \"" << json_escape(r.flag) << "\"\n";
        os << "    }" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

}  // namespace ikeda::data
