#include "lumps/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lumps/errors.hpp"

namespace lumps {

std::string with_metadata(const std::map<std::string, std::string>& meta,
                          const std::string& payload) {
    std::ostringstream os;
    os << "# code_version = " << kVersion << "\n";
    for (const auto& [k, v] : meta) os << "# " << k << " = " << v << "\n";
    os << payload;
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw invalid_input("write_file: cannot open " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw invalid_input("write_file: cannot rename onto " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("read_file: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace lumps
