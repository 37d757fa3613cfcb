#ifndef REINHARDT_JSONOUT_HPP
#define REINHARDT_JSONOUT_HPP

#include <string>
#include <vector>

namespace reinhardt {

// Minimal JSON emitter. Numbers are printed as decimals with 17 significant
// digits so every double round-trips and output is byte-stable across runs.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(const std::vector<double>& v);
    JsonWriter& value(const std::vector<int>& v);

    const std::string& str() const { return out_; }

    static std::string format_double(double v);
    static std::string escape(const std::string& s);

  private:
    void comma();
    std::string out_;
    std::vector<bool> first_;  // per nesting level
    bool pending_key_ = false;
};

}  // namespace reinhardt

#endif
