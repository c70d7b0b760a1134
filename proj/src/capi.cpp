#include "weylfold/weylfold.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"
#include "errors.hpp"
#include "weyl.hpp"

struct wf_session {
    unsigned long long budget = weylfold::kDefaultOrderBudget;
    std::string last_error;
};

namespace {

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

wf_status run(wf_session *session, const char *command, const char *request_json,
              char **report_json) {
    if (report_json) *report_json = nullptr;
    if (!session) return WF_ERR_INVALID_INPUT;
    session->last_error.clear();
    if (!request_json || !report_json) {
        session->last_error = "null argument";
        return WF_ERR_INVALID_INPUT;
    }
    try {
        const nlohmann::json report =
            weylfold::run_command(command, request_json, session->budget);
        *report_json = dup_string(report.dump());
        if (!*report_json) {
            session->last_error = "out of memory";
            return WF_ERR_INTERNAL;
        }
        return WF_OK;
    } catch (const weylfold::invalid_input &e) {
        session->last_error = e.what();
        return WF_ERR_INVALID_INPUT;
    } catch (const weylfold::budget_exceeded &e) {
        session->last_error = e.what();
        return WF_ERR_BUDGET;
    } catch (const weylfold::consistency_error &e) {
        session->last_error = e.what();
        return WF_ERR_INTERNAL;
    } catch (const std::exception &e) {
        session->last_error = e.what();
        return WF_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

wf_session *wf_session_new(void) { return new (std::nothrow) wf_session(); }

void wf_session_free(wf_session *session) { delete session; }

wf_status wf_session_set_budget(wf_session *session, unsigned long long max_group_order) {
    if (!session) return WF_ERR_INVALID_INPUT;
    if (max_group_order == 0) {
        session->last_error = "budget must be positive";
        return WF_ERR_INVALID_INPUT;
    }
    session->budget = max_group_order;
    return WF_OK;
}

unsigned long long wf_session_budget(const wf_session *session) {
    return session ? session->budget : 0;
}

const char *wf_session_last_error(const wf_session *session) {
    return session ? session->last_error.c_str() : "null session";
}

wf_status wf_fold(wf_session *s, const char *req, char **rep) { return run(s, "fold", req, rep); }
wf_status wf_namikawa(wf_session *s, const char *req, char **rep) {
    return run(s, "namikawa", req, rep);
}
wf_status wf_fan(wf_session *s, const char *req, char **rep) { return run(s, "fan", req, rep); }
wf_status wf_kleinian(wf_session *s, const char *req, char **rep) {
    return run(s, "kleinian", req, rep);
}
wf_status wf_hecke(wf_session *s, const char *req, char **rep) { return run(s, "hecke", req, rep); }
wf_status wf_selftest(wf_session *s, const char *req, char **rep) {
    return run(s, "selftest", req, rep);
}

void wf_string_free(char *s) { std::free(s); }

const char *wf_version(void) { return weylfold::kVersion; }

}  // extern "C"
