#include "ahprank/grading_template.hpp"

namespace ahprank {

namespace {

Question summary(std::string id, std::string prompt, MetricType metric) {
    return {std::move(id), std::nullopt, std::move(prompt), std::move(metric), false};
}

Question ask(Quality q, std::string id, std::string prompt, MetricType metric,
             bool requires_install = false) {
    return {std::move(id), q, std::move(prompt), std::move(metric), requires_install};
}

Question impression(Quality q, std::string id) {
    return ask(q, std::move(id), "Overall impression?", MetricType::of(MetricKind::grade_1_10));
}

MetricType choice(MetricKind kind, std::vector<std::string> members) {
    return MetricType::with_members(kind, std::move(members));
}

GradingTemplate make_builtin() {
    using MK = MetricKind;
    GradingTemplate t;

    t.summary_questions = {
        summary("summary.name", "Software name?", MetricType::of(MK::text)),
        summary("summary.url", "URL?", MetricType::of(MK::url)),
        summary("summary.institution", "Educational institution", MetricType::of(MK::text)),
        summary("summary.purpose", "Software purpose", MetricType::of(MK::text)),
        summary("summary.n_developers", "Number of developers", MetricType::of(MK::number)),
        summary("summary.funding", "How is the project funded", MetricType::of(MK::text)),
        summary("summary.downloads", "Number of downloads for current version",
                MetricType::of(MK::number)),
        summary("summary.release_date", "Release date", MetricType::of(MK::date)),
        summary("summary.last_updated", "Last updated", MetricType::of(MK::date)),
        summary("summary.status", "Status", choice(MK::enum_set, {"alive", "dead", "unclear"})),
        summary("summary.license", "License",
                choice(MK::enum_set,
                       {"gnu_gpl", "bsd", "mit", "terms_of_use", "trial", "none", "unclear"})),
        summary("summary.platforms", "Platforms",
                choice(MK::enum_set, {"windows", "linux", "osx", "android", "other"})),
        summary("summary.category", "Category",
                choice(MK::enum_set, {"concept", "public", "private"})),
        summary("summary.development_model", "Development model",
                choice(MK::enum_set, {"open_source", "freeware", "commercial"})),
        summary("summary.publications_using", "Publications using the software",
                MetricType::of(MK::url)),
        summary("summary.publications_about", "Publications about the software",
                MetricType::of(MK::url)),
        summary("summary.source_available", "Is source code available?",
                MetricType::of(MK::yes_no)),
        summary("summary.languages", "Programming language(s)",
                choice(MK::enum_set, {"fortran", "matlab", "c", "cpp", "java", "r", "ruby",
                                      "python", "cython", "basic", "pascal", "idl", "unclear"})),
    };

    {
        QualitySection s{Quality::installability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "install.instructions", "Are there installation instructions?",
                MetricType::of(MK::yes_no)),
            ask(q, "install.instructions_linear", "Are the installation instructions linear?",
                MetricType::of(MK::yes_no_na)),
            ask(q, "install.automated", "Is there something in place to automate the installation?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "install.validation",
                "Is there a specified way to validate the installation, such as a test suite?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "install.steps", "How many steps were involved in the installation?",
                MetricType::of(MK::number)),
            ask(q, "install.packages",
                "How many software packages need to be installed before or during installation?",
                MetricType::of(MK::number)),
            ask(q, "install.uninstall_problems",
                "Run uninstall, if available. Were any obvious problems caused?",
                choice(MK::yes_star_no, {"unavail", "yes*", "no"}), true),
        };
        s.overall_impression = impression(q, "install.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::correctness_verifiability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "correctness.external_libraries", "Are external libraries used?",
                choice(MK::yes_no_unclear, {"yes*", "no", "unclear"})),
            ask(q, "correctness.community_confidence",
                "Does the community have confidence in this library?",
                MetricType::of(MK::yes_no_unclear)),
            ask(q, "correctness.requirements_spec",
                "Any reference to the requirements specifications of the program?",
                choice(MK::yes_no_unclear, {"yes*", "no", "unclear"})),
            ask(q, "correctness.confidence_tools",
                "What tools or techniques are used to build confidence of correctness?",
                MetricType::of(MK::text)),
            ask(q, "correctness.tutorial_output_expected",
                "If there is a getting started tutorial, is the output as expected?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"}), true),
        };
        s.overall_impression = impression(q, "correctness.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::reliability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "reliability.break_install", "Did the software \"break\" during installation?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "reliability.break_tutorial",
                "Did the software \"break\" during the initial tutorial testing?",
                choice(MK::yes_no_na, {"yes*", "no", "n/a"}), true),
        };
        s.overall_impression = impression(q, "reliability.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::robustness, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "robustness.garbage_input", "Does the software handle garbage input reasonably?",
                choice(MK::yes_no, {"yes", "no*"}), true),
            ask(q, "robustness.line_endings",
                "For any plain text input files, if all new lines are replaced with new lines and "
                "carriage returns, will the software handle this gracefully?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"}), true),
        };
        s.overall_impression = impression(q, "robustness.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::performance, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "performance.evidence", "Is there evidence that performance was considered?",
                MetricType::of(MK::yes_star_no)),
        };
        s.overall_impression = impression(q, "performance.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::usability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "usability.tutorial", "Is there a getting started tutorial?",
                MetricType::of(MK::yes_no)),
            ask(q, "usability.standard_example", "Is there a standard example that is explained?",
                MetricType::of(MK::yes_no)),
            ask(q, "usability.user_manual", "Is there a user manual?", MetricType::of(MK::yes_no)),
            ask(q, "usability.look_and_feel",
                "Does the application have the usual \"look and feel\" for the platform it is on?",
                choice(MK::yes_no, {"yes", "no*"}), true),
            ask(q, "usability.visibility_issues",
                "Are there any features that show a lack of visibility?",
                choice(MK::yes_no, {"yes", "no*"}), true),
            ask(q, "usability.user_characteristics",
                "Are expected user characteristics documented?", MetricType::of(MK::yes_no)),
            ask(q, "usability.support_model", "What is the user support model?",
                MetricType::of(MK::text)),
        };
        s.overall_impression = impression(q, "usability.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::maintainability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "maintainability.multiple_versions",
                "Is there a history of multiple versions of the software?",
                MetricType::of(MK::yes_no_unclear)),
            ask(q, "maintainability.contribution_info",
                "Is there any information on how code is reviewed, or how to contribute?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "maintainability.changelog", "Is there a changelog?",
                MetricType::of(MK::yes_no)),
            ask(q, "maintainability.maintenance_type", "What is the maintenance type?",
                choice(MK::enum_set, {"corrective", "adaptive", "perfective", "unclear"})),
            ask(q, "maintainability.issue_tracker", "What issue tracking tool is employed?",
                choice(MK::enum_set, {"trac", "jira", "redmine", "email", "discussion_board",
                                      "sourceforge", "google_code", "git", "none", "unclear"})),
            ask(q, "maintainability.bugs_fixed", "Are the majority of identified bugs fixed?",
                choice(MK::yes_no_unclear, {"yes", "no*", "unclear"})),
            ask(q, "maintainability.version_control", "Which version control system is in use?",
                choice(MK::enum_set, {"svn", "cvs", "git", "github", "unclear"})),
            ask(q, "maintainability.design_evidence",
                "Is there evidence that maintainability was considered in the design?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "maintainability.code_clones", "Are there code clones?",
                choice(MK::yes_no_unclear, {"yes*", "no", "unclear"})),
        };
        s.overall_impression = impression(q, "maintainability.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::reusability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "reusability.reused_elsewhere",
                "Are any portions of the software used by another package?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "reusability.design_evidence",
                "Is there evidence that reusability was considered in the design?",
                choice(MK::yes_no_unclear, {"yes*", "no", "unclear"})),
        };
        s.overall_impression = impression(q, "reusability.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::portability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "portability.advertised_platforms",
                "What platforms is the software advertised to work on?",
                choice(MK::enum_set, {"windows", "linux", "osx", "android", "other"})),
            ask(q, "portability.source_handling",
                "Are special steps taken in the source code to handle portability?",
                choice(MK::yes_no_na, {"yes*", "no", "n/a"})),
            ask(q, "portability.not_important",
                "Is portability explicitly identified as NOT being important?",
                MetricType::of(MK::yes_no)),
            ask(q, "portability.achieved_evidence",
                "Convincing evidence that portability has been achieved?",
                MetricType::of(MK::yes_star_no)),
        };
        s.overall_impression = impression(q, "portability.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::understandability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "understandability.indentation",
                "Consistent indentation and formatting style?", MetricType::of(MK::yes_no_na)),
            ask(q, "understandability.coding_standard",
                "Explicit identification of a coding standard?",
                choice(MK::yes_no_na, {"yes*", "no", "n/a"})),
            ask(q, "understandability.identifiers",
                "Are the code identifiers consistent, distinctive, and meaningful?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"})),
            ask(q, "understandability.hardcoded_constants",
                "Are constants (other than 0 and 1) hard coded into the program?",
                choice(MK::yes_no_na, {"yes*", "no", "n/a"})),
            ask(q, "understandability.comments",
                "Comments are clear, indicate what is being done, not how?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"})),
            ask(q, "understandability.algorithm_references",
                "Is the name/URL of any algorithms used mentioned?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"})),
            ask(q, "understandability.parameter_order",
                "Parameters are in the same order for all functions?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"})),
            ask(q, "understandability.modular", "Is code modularized?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"})),
            ask(q, "understandability.file_names", "Descriptive names of source code files?",
                choice(MK::yes_no_na, {"yes", "no*", "n/a"})),
            ask(q, "understandability.design_document", "Is a design document provided?",
                choice(MK::yes_no_na, {"yes*", "no", "n/a"})),
        };
        s.overall_impression = impression(q, "understandability.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::interoperability, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "interoperability.external_systems",
                "Does the software interoperate with external systems?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "interoperability.workflow", "Is there a workflow that uses other softwares?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "interoperability.api_defined",
                "If there are external interactions, is the API clearly defined?",
                choice(MK::yes_no_na, {"yes*", "no", "n/a"})),
        };
        s.overall_impression = impression(q, "interoperability.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::transparency, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "transparency.process_defined",
                "Is the development process defined? If yes, what process is used.",
                choice(MK::yes_no_na, {"yes*", "no", "n/a"})),
            ask(q, "transparency.external_examination",
                "Ease of external examination relative to other products considered?",
                MetricType::of(MK::grade_1_10)),
        };
        s.overall_impression = impression(q, "transparency.impression");
        t.qualities.push_back(std::move(s));
    }

    {
        QualitySection s{Quality::reproducibility, {}, {}};
        const Quality q = s.quality;
        s.questions = {
            ask(q, "reproducibility.environment_record",
                "Is there a record of the environment used for their development and testing?",
                MetricType::of(MK::yes_star_no)),
            ask(q, "reproducibility.test_data", "Is test data available for verification?",
                MetricType::of(MK::yes_no)),
            ask(q, "reproducibility.automated_context",
                "Are automated tools used to capture experimental context?",
                MetricType::of(MK::yes_star_no)),
        };
        s.overall_impression = impression(q, "reproducibility.impression");
        t.qualities.push_back(std::move(s));
    }

    return t;
}

} // namespace

const GradingTemplate& builtin_template() {
    static const GradingTemplate t = make_builtin();
    return t;
}

} // namespace ahprank
