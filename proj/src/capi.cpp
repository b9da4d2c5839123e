#include "coxrh.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "coxrh/errors.hpp"
#include "coxrh/io.hpp"

struct coxrh_input {
  coxrh::InputDocument doc;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error_out, const std::string& message) {
  if (error_out) *error_out = dup_string(message);
}

int status_of(const coxrh::Error& e) {
  return e.is_capacity() ? COXRH_ECAP : COXRH_EINPUT;
}

}  // namespace

extern "C" {

int coxrh_input_parse(const char* text, int format, coxrh_input** out,
                      char** error_out) {
  if (error_out) *error_out = nullptr;
  if (!text || !out) {
    set_error(error_out, "null argument");
    return COXRH_EUSAGE;
  }
  *out = nullptr;
  coxrh::InputFormat fmt;
  switch (format) {
    case COXRH_FORMAT_AUTO: fmt = coxrh::InputFormat::Auto; break;
    case COXRH_FORMAT_JSON: fmt = coxrh::InputFormat::Json; break;
    case COXRH_FORMAT_TXT: fmt = coxrh::InputFormat::Txt; break;
    default:
      set_error(error_out, "unknown format code");
      return COXRH_EUSAGE;
  }
  try {
    auto handle = new coxrh_input{coxrh::parse_input(text, fmt)};
    *out = handle;
    return COXRH_OK;
  } catch (const coxrh::Error& e) {
    set_error(error_out, e.what());
    return status_of(e);
  } catch (const std::bad_alloc&) {
    set_error(error_out, "out of memory");
    return COXRH_ECAP;
  } catch (const std::exception& e) {
    set_error(error_out, e.what());
    return COXRH_EINPUT;
  }
}

void coxrh_input_free(coxrh_input* input) { delete input; }

int coxrh_input_rank(const coxrh_input* input) {
  if (!input || !input->doc.matrix) return -1;
  return input->doc.matrix->rank();
}

int coxrh_run(const coxrh_input* input, const char* command,
              const char* options_json, char** report_out, char** error_out) {
  if (error_out) *error_out = nullptr;
  if (!input || !command || !report_out) {
    set_error(error_out, "null argument");
    return COXRH_EUSAGE;
  }
  *report_out = nullptr;
  static const char* kCommands[] = {
      "classify",       "perp",   "moussong",       "relhyp-verify",
      "relhyp-minimal", "decide", "maxparab",       "isolated-flats",
      "racg",           "dot"};
  bool known = false;
  for (const char* c : kCommands) known |= (std::strcmp(c, command) == 0);
  if (!known) {
    set_error(error_out, std::string("unknown command '") + command + "'");
    return COXRH_EUSAGE;
  }
  try {
    coxrh::CommandOptions opts =
        coxrh::parse_options_json(options_json ? options_json : "");
    coxrh::CommandResult result =
        coxrh::run_command(input->doc, command, opts);
    std::string rendered =
        opts.json ? coxrh::dump_report(result.json) : result.text;
    *report_out = dup_string(rendered);
    if (!*report_out) {
      set_error(error_out, "out of memory");
      return COXRH_ECAP;
    }
    return COXRH_OK;
  } catch (const coxrh::Error& e) {
    set_error(error_out, e.what());
    return status_of(e);
  } catch (const std::bad_alloc&) {
    set_error(error_out, "out of memory");
    return COXRH_ECAP;
  } catch (const std::exception& e) {
    set_error(error_out, e.what());
    return COXRH_EINPUT;
  }
}

void coxrh_string_free(char* s) { std::free(s); }

const char* coxrh_version(void) { return "1.0.0"; }

}  // extern "C"
