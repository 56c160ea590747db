"""One-off builder for src/sdg_interactions/data/sdg_targets.csv.

The emitted CSV is the single source of truth shipped with the package;
this script only exists so the file can be regenerated or audited.
"""

import csv
from pathlib import Path

GOALS = {
    1: ("No Poverty", "#E5243B"),
    2: ("Zero Hunger", "#DDA63A"),
    3: ("Good Health and Well-being", "#4C9F38"),
    4: ("Quality Education", "#C5192D"),
    5: ("Gender Equality", "#FF3A21"),
    6: ("Clean Water and Sanitation", "#26BDE2"),
    7: ("Affordable and Clean Energy", "#FCC30B"),
    8: ("Decent Work and Economic Growth", "#A21942"),
    9: ("Industry, Innovation and Infrastructure", "#FD6925"),
    10: ("Reduced Inequalities", "#DD1367"),
    11: ("Sustainable Cities and Communities", "#FD9D24"),
    12: ("Responsible Consumption and Production", "#BF8B2E"),
    13: ("Climate Action", "#3F7E44"),
    14: ("Life Below Water", "#0A97D9"),
    15: ("Life on Land", "#56C02B"),
    16: ("Peace, Justice and Strong Institutions", "#00689D"),
    17: ("Partnerships for the Goals", "#19486A"),
}

TARGETS = {
    "1.1": "Eradicate extreme poverty",
    "1.2": "Reduce poverty by at least 50%",
    "1.3": "Implement social protection systems",
    "1.4": "Equal rights to ownership, basic services, technology and economic resources",
    "1.5": "Build resilience to environmental, economic and social disasters",
    "1.A": "Mobilize resources to implement policies to end poverty",
    "1.B": "Create pro-poor and gender-sensitive policy frameworks",
    "2.1": "Universal access to safe and nutritious food",
    "2.2": "End all forms of malnutrition",
    "2.3": "Double the productivity and incomes of small-scale food producers",
    "2.4": "Sustainable food production and resilient agricultural practices",
    "2.5": "Maintain the genetic diversity in food production",
    "2.A": "Invest in rural infrastructure, agricultural research, technology and gene banks",
    "2.B": "Prevent agricultural trade restrictions, market distortions and export subsidies",
    "2.C": "Ensure stable food commodity markets and timely access to market information",
    "3.1": "Reduce maternal mortality",
    "3.2": "End all preventable deaths under 5 years of age",
    "3.3": "Fight communicable diseases",
    "3.4": "Reduce mortality from non-communicable diseases and promote mental health",
    "3.5": "Prevent and treat substance abuse",
    "3.6": "Reduce road injuries and deaths",
    "3.7": "Universal access to sexual and reproductive care, family planning and education",
    "3.8": "Achieve universal health coverage",
    "3.9": "Reduce illnesses and deaths from hazardous chemicals and pollution",
    "3.A": "Implement the WHO framework convention on tobacco control",
    "3.B": "Support research, development and universal access to affordable vaccines and medicines",
    "3.C": "Increase health financing and support health workforce in developing countries",
    "3.D": "Improve early warning systems for global health risks",
    "4.1": "Free primary and secondary education",
    "4.2": "Equal access to quality pre-primary education",
    "4.3": "Equal access to affordable technical, vocational and higher education",
    "4.4": "Increase the number of people with relevant skills for financial success",
    "4.5": "Eliminate all discrimination in education",
    "4.6": "Universal literacy and numeracy",
    "4.7": "Education for sustainable development and global citizenship",
    "4.A": "Build and upgrade inclusive and safe schools",
    "4.B": "Expand higher education scholarships for developing countries",
    "4.C": "Increase the supply of qualified teachers in developing countries",
    "5.1": "End discrimination against women and girls",
    "5.2": "End all violence against and exploitation of women and girls",
    "5.3": "Eliminate forced marriages and genital mutilation",
    "5.4": "Value unpaid care and promote shared domestic responsibilities",
    "5.5": "Ensure full participation in leadership and decision-making",
    "5.6": "Universal access to reproductive rights and health",
    "5.A": "Equal rights to economic resources, property ownership and financial services",
    "5.B": "Promote empowerment of women through technology",
    "5.C": "Adopt and strengthen policies and enforceable legislation for gender equality",
    "6.1": "Safe and affordable drinking water",
    "6.2": "End open defecation and provide access to sanitation and hygiene",
    "6.3": "Improve water quality, wastewater treatment and safe reuse",
    "6.4": "Increase water-use efficiency and ensure freshwater supplies",
    "6.5": "Implement integrated water resources management",
    "6.6": "Protect and restore water-related ecosystems",
    "6.A": "Expand water and sanitation support to developing countries",
    "6.B": "Support local engagement in water and sanitation management",
    "7.1": "Universal access to modern energy",
    "7.2": "Increase global percentage of renewable energy",
    "7.3": "Double the improvement in energy efficiency",
    "7.A": "Promote access to research, technology and investments in clean energy",
    "7.B": "Expand and upgrade energy services for developing countries",
    "8.1": "Sustainable economic growth",
    "8.2": "Diversify, innovate and upgrade for economic productivity",
    "8.3": "Promote policies to support job creation and growing enterprises",
    "8.4": "Improve resource efficiency in consumption and production",
    "8.5": "Full employment and decent work with equal pay",
    "8.6": "Promote youth employment, education and training",
    "8.7": "End modern slavery, trafficking and child labour",
    "8.8": "Protect labour rights and promote safe working environments",
    "8.9": "Promote beneficial and sustainable tourism",
    "8.10": "Universal access to banking, insurance and financial services",
    "8.A": "Increase aid for trade support",
    "8.B": "Develop a global youth employment strategy",
    "9.1": "Develop sustainable, resilient and inclusive infrastructures",
    "9.2": "Promote inclusive and sustainable industrialization",
    "9.3": "Increase access to financial services and markets",
    "9.4": "Upgrade all industries and infrastructures for sustainability",
    "9.5": "Enhance research and upgrade industrial technologies",
    "9.A": "Facilitate sustainable infrastructure development for developing countries",
    "9.B": "Support domestic technology development and industrial diversification",
    "9.C": "Universal access to information and communications technology",
    "10.1": "Reduce income inequalities",
    "10.2": "Promote universal social, economic and political inclusion",
    "10.3": "Ensure equal opportunities and end discrimination",
    "10.4": "Adopt fiscal and social policies that promote equality",
    "10.5": "Improved regulation of global financial markets and institutions",
    "10.6": "Enhanced representation for developing countries in financial institutions",
    "10.7": "Responsible and well-managed migration policies",
    "10.A": "Special and differential treatment for developing countries",
    "10.B": "Encourage development assistance and investment in least developed countries",
    "10.C": "Reduce transaction costs for migrant remittances",
    "11.1": "Safe and affordable housing",
    "11.2": "Affordable and sustainable transport systems",
    "11.3": "Inclusive and sustainable urbanization",
    "11.4": "Protect the world's cultural and natural heritage",
    "11.5": "Reduce the adverse effects of natural disasters",
    "11.6": "Reduce the environmental impact of cities",
    "11.7": "Provide access to safe and inclusive green and public spaces",
    "11.A": "Strong national and regional development planning",
    "11.B": "Implement policies for inclusion, resource efficiency and disaster risk reduction",
    "11.C": "Support least developed countries in sustainable and resilient building",
    "12.1": "Implement the 10-year sustainable consumption and production framework",
    "12.2": "Sustainable management and use of natural resources",
    "12.3": "Halve global per capita food waste",
    "12.4": "Responsible management of chemicals and waste",
    "12.5": "Substantially reduce waste generation",
    "12.6": "Encourage companies to adopt sustainable practices and reporting",
    "12.7": "Promote sustainable public procurement practices",
    "12.8": "Promote universal understanding of sustainable lifestyles",
    "12.A": "Support developing countries' capacity for sustainable consumption and production",
    "12.B": "Develop and implement tools to monitor sustainable tourism",
    "12.C": "Remove market distortions that encourage wasteful consumption",
    "13.1": "Strengthen resilience and adaptive capacity to climate-related disasters",
    "13.2": "Integrate climate change measures into policy and planning",
    "13.3": "Build knowledge and capacity to meet climate change",
    "13.A": "Implement the UN framework convention on climate change",
    "13.B": "Promote mechanisms to raise capacity for planning and management",
    "14.1": "Reduce marine pollution",
    "14.2": "Protect and restore marine and coastal ecosystems",
    "14.3": "Reduce ocean acidification",
    "14.4": "Sustainable fishing",
    "14.5": "Conserve coastal and marine areas",
    "14.6": "End subsidies contributing to overfishing",
    "14.7": "Increase the economic benefits from sustainable use of marine resources",
    "14.A": "Increase scientific knowledge, research and technology for ocean health",
    "14.B": "Support small-scale fishers",
    "14.C": "Implement and enforce international sea law",
    "15.1": "Conserve and restore terrestrial and freshwater ecosystems",
    "15.2": "End deforestation and restore degraded forests",
    "15.3": "End desertification and restore degraded land",
    "15.4": "Ensure conservation of mountain ecosystems",
    "15.5": "Protect biodiversity and natural habitats",
    "15.6": "Promote access to genetic resources and fair sharing of the benefits",
    "15.7": "Eliminate poaching and trafficking of protected species",
    "15.8": "Prevent invasive alien species on land and in water ecosystems",
    "15.9": "Integrate ecosystem and biodiversity in governmental planning",
    "15.A": "Increase financial resources to conserve and sustainably use ecosystems",
    "15.B": "Finance and incentivize sustainable forest management",
    "15.C": "Combat global poaching and trafficking",
    "16.1": "Reduce violence everywhere",
    "16.2": "Protect children from abuse, exploitation, trafficking and violence",
    "16.3": "Promote the rule of law and ensure equal access to justice",
    "16.4": "Combat organized crime and illicit financial and arms flows",
    "16.5": "Substantially reduce corruption and bribery",
    "16.6": "Develop effective, accountable and transparent institutions",
    "16.7": "Ensure responsive, inclusive and representative decision-making",
    "16.8": "Strengthen the participation in global governance",
    "16.9": "Provide universal legal identity",
    "16.10": "Ensure public access to information and protect fundamental freedoms",
    "16.A": "Strengthen national institutions to prevent violence and combat crime",
    "16.B": "Promote and enforce non-discriminatory laws and policies",
    "17.1": "Mobilize resources to improve domestic revenue collection",
    "17.2": "Implement all development assistance commitments",
    "17.3": "Mobilize financial resources for developing countries",
    "17.4": "Assist developing countries in attaining debt sustainability",
    "17.5": "Invest in least developed countries",
    "17.6": "Knowledge sharing and cooperation for access to science and technology",
    "17.7": "Promote sustainable technologies to developing countries",
    "17.8": "Strengthen the science, technology and innovation capacity for least developed countries",
    "17.9": "Enhance SDG capacity in developing countries",
    "17.10": "Promote a universal trading system under the WTO",
    "17.11": "Increase the exports of developing countries",
    "17.12": "Remove trade barriers for least developed countries",
    "17.13": "Enhance global macroeconomic stability",
    "17.14": "Enhance policy coherence for sustainable development",
    "17.15": "Respect national leadership to implement policies for development",
    "17.16": "Enhance the global partnership for sustainable development",
    "17.17": "Encourage effective partnerships",
    "17.18": "Enhance availability of reliable data",
    "17.19": "Further develop measurements of progress",
}

EXPECTED_PER_GOAL = {
    1: 7, 2: 8, 3: 13, 4: 10, 5: 9, 6: 8, 7: 5, 8: 12, 9: 8,
    10: 10, 11: 10, 12: 11, 13: 5, 14: 10, 15: 12, 16: 12, 17: 19,
}


def main():
    assert len(TARGETS) == 169, len(TARGETS)
    per_goal = {}
    for tid in TARGETS:
        g = int(tid.split(".")[0])
        per_goal[g] = per_goal.get(g, 0) + 1
    assert per_goal == EXPECTED_PER_GOAL, per_goal

    out = Path(__file__).resolve().parents[1] / "src" / "sdg_interactions" / "data" / "sdg_targets.csv"
    with out.open("w", newline="", encoding="utf-8") as fh:
        fh.write("# sdg-targets catalog, format v1\n")
        writer = csv.writer(fh)
        writer.writerow(["target_id", "goal_name", "goal_color", "description"])
        for tid, desc in TARGETS.items():
            g = int(tid.split(".")[0])
            name, color = GOALS[g]
            writer.writerow([tid, name, color, desc])
    print(f"wrote {out} ({len(TARGETS)} targets)")


if __name__ == "__main__":
    main()
