#include <sgc/report.hpp>

#include <sstream>

namespace sgc {

namespace {
    auto scalar(const Json & j) -> std::string
    {
        if (j.is_string())
            return j.get<std::string>();
        return j.dump();
    }

    auto render(std::ostringstream & out, const std::string & indent, const std::string & key, const Json & value) -> void
    {
        if (value.is_object()) {
            out << indent << key << ":\n";
            for (auto & [k, v] : value.items())
                render(out, indent + "  ", k, v);
        }
        else if (value.is_array() && ! value.empty() && (value.front().is_object() || value.front().is_array())) {
            out << indent << key << ":\n";
            for (auto & item : value) {
                if (item.is_object()) {
                    out << indent << "  -\n";
                    for (auto & [k, v] : item.items())
                        render(out, indent + "    ", k, v);
                }
                else
                    render(out, indent + "  ", "-", item);
            }
        }
        else if (value.is_array()) {
            out << indent << key << ":";
            for (auto & item : value)
                out << ' ' << scalar(item);
            out << '\n';
        }
        else if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
            out << indent << key << ":\n";
            std::istringstream lines{value.get<std::string>()};
            std::string line;
            while (std::getline(lines, line))
                out << indent << "  | " << line << '\n';
        }
        else
            out << indent << key << ": " << scalar(value) << '\n';
    }
}

auto render_text(const Json & report) -> std::string
{
    std::ostringstream out;
    for (auto & [key, value] : report.items())
        render(out, "", key, value);
    return out.str();
}

}
